class Shared {
    int count;
    void add() { count = count + 1; }
    int total() { return count; }
}
