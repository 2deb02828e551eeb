class Actions {
    void switch() {
        log();
    }
    void log() { }
}
