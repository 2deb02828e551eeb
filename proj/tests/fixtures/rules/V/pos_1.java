class Speed {
    int limit = 10;
    void run(int d) {
        use(d / limit);
    }
    void stop() { }
    void use(int x) { }
}
