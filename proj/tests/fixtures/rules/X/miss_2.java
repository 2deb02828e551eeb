class MidDefault {
    void act(int x) {
        switch (x) {
            case 1:
                break;
            default:
                break;
            case 2:
                break;
        }
    }
}
