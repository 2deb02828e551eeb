class Bounds {
    boolean big(int a, int b) {
        return a => b;
    }
}
