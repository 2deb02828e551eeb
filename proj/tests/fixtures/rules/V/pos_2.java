class Gauge {
    int level = 0;
    void pump() {
        level = level + 1;
    }
    void vent() { }
}
