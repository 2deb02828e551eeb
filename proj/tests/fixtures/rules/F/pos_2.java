class Ticks {
    void tick(int n) {
        for (int i = 0; i < n, i++) {
            go(i);
        }
    }
    void go(int i) { }
}
