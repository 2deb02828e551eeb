class Filler {
    void fill(int[] slots) {
        for (int i = 0; i <= slots.length; i++) {
            slots[i] = i;
        }
    }
}
