class Always {
    void check(int x) {
        if (x > 0); {
            run(x);
        }
    }
    void run(int x) { }
}
