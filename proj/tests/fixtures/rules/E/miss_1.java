class EmptyBlock {
    void noop(int x) {
        if (x > 0) { }
    }
}
