class Gate {
    String next(String c) { return c; }
    void open(String code, String secret) {
        while (code != secret) {
            code = next(code);
        }
    }
}
