class HasDefault {
    void act(int x) {
        switch (x) {
            case 1:
                break;
            default:
                break;
        }
    }
}
