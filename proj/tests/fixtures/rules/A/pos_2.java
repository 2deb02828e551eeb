class ReadyGate {
    boolean isReady() { return true; }
    void poll() {
        boolean flag = false;
        if (flag = isReady()) {
            flag = false;
        }
    }
}
