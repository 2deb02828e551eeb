class Params {
    int twice(int return) {
        return 2;
    }
}
