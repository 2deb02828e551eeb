class Limit {
    void clamp(int a, int b) {
        if (a => b) {
            a = b;
        }
    }
}
