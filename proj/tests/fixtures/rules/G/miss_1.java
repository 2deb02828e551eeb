class Normal {
    void check(int x) {
        if (x > 0) {
            use(x);
        }
    }
    void use(int x) { }
}
