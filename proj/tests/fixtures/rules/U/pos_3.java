class States {
    int state;
    void step() {
        if (state == 0) {
            state = 1;
        } else if (state == 1) {
            state = 2;
        } else if (state == 2) {
            state = 3;
        } else if (state == 3) {
            state = 0;
        }
    }
    int current() { return state; }
}
