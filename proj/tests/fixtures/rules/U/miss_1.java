class Small {
    void pick(int x) {
        if (x == 1) {
            use(1);
        } else if (x == 2) {
            use(2);
        }
    }
    void use(int x) { }
}
