class Ends {
    int go(int x) {
        switch (x) {
            case 1:
                return 1;
            case 2:
                break;
            default:
                return 0;
        }
        return -1;
    }
}
