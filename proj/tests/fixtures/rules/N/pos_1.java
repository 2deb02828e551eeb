class Shout {
    void emit(String s) {
        s.toUpperCase();
    }
}
