class Account {
    void close(String owner, String requester) {
        if (owner == requester) {
            wipe();
        }
        if (balanceLow()); {
            warn();
        }
    }
    boolean balanceLow() { return true; }
    void wipe() { }
    void warn() { }
}
