class Stacked {
    void go(int x) {
        switch (x) {
            case 1:
            case 2:
                both();
                break;
            default:
                break;
        }
    }
    void both() { }
}
