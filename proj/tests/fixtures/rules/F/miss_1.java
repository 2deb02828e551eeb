class Fine {
    void loop(int n) {
        for (int i = 0; i < n; i++) {
            use(i);
        }
    }
    void use(int i) { }
}
