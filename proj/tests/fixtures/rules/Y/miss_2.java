class Adjusted {
    void copy(int[] src) {
        int last = 0;
        for (int i = 0; i <= src.length - 1; i++) {
            last = src[i];
        }
        use(last);
    }
    void use(int x) { }
}
