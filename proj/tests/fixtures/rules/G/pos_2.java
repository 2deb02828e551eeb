class Spin {
    void run(int n) {
        while { n > 0 } {
            n = n - 1;
        }
    }
}
