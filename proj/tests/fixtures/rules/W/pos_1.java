class Fall {
    void act(int x) {
        switch (x) {
            case 1:
                doA();
            case 2:
                doB();
                break;
            default:
                break;
        }
    }
    void doA() { }
    void doB() { }
}
