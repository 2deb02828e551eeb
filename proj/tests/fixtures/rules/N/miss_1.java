class Logger {
    void log(String m) { }
    void run() {
        log("hi");
    }
}
