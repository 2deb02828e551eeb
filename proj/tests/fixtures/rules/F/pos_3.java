class Cursor {
    void scan(int n) {
        int i;
        for (i = 0, i < n, i++) {
            look(i);
        }
    }
    void look(int i) { }
}
