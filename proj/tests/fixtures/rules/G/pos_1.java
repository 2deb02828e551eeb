class GateKeeper {
    void open(int x) {
        if { x > 0 } {
            pass();
        }
    }
    void pass() { }
}
