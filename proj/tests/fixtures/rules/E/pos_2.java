class Skip {
    void loop(int n) {
        for (int i = 0; i < n; i++);
    }
}
