class ArrayLen {
    int count(int[] data) {
        return data.length;
    }
}
