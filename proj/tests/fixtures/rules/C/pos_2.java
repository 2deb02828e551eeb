class Index {
    int first(int[] data) {
        int a = data[0);
        return a;
    }
}
