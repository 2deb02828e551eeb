class Attic {
    int dusty;
    void visit() { }
}
