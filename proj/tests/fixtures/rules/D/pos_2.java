class Retry {
    boolean retry() { return false; }
    void spin(boolean ok) {
        while (ok | retry()) {
            ok = false;
        }
    }
}
