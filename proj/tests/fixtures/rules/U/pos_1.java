class Menu {
    void choose(int x) {
        if (x == 1) {
            one();
        } else if (x == 2) {
            two();
        } else if (x == 3) {
            three();
        }
    }
    void one() { }
    void two() { }
    void three() { }
}
