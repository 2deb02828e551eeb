class Drain {
    void empty(int level) {
        while (level => 1) {
            level = level - 1;
        }
    }
}
