class Nested {
    void act(int x, int y) {
        switch (x) {
            case 1:
                switch (y) {
                    case 2:
                        break;
                }
                break;
            default:
                break;
        }
    }
}
