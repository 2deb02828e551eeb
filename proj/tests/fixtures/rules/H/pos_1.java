class Vars {
    int broken() {
        int class = 5;
        return 0;
    }
}
