class Cleaner {
    void clean(String raw) {
        raw.trim();
    }
}
