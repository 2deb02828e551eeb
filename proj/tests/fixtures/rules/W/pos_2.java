class Cascade {
    int map(int x) {
        int r = 0;
        switch (x) {
            case 1:
                r = 1;
            case 2:
                r = 2;
            case 3:
                r = 3;
                break;
            default:
                r = 0;
        }
        return r;
    }
}
