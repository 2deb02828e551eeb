class MiddleDefault {
    void handle(int x) {
        switch (x) {
            default:
                prep();
            case 1:
                done();
                break;
        }
    }
    void prep() { }
    void done() { }
}
