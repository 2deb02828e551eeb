class MixedVars {
    void pick(int x, int y) {
        if (x == 1) {
            use(1);
        } else if (y == 2) {
            use(2);
        } else if (x == 3) {
            use(3);
        }
    }
    void use(int x) { }
}
