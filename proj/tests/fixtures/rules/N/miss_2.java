class Used {
    int compute() { return 7; }
    void run() {
        int r = compute();
        use(r);
    }
    void use(int x) { }
}
