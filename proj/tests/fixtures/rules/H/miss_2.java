class Flow {
    int pick(boolean flag) {
        if (flag) {
            return 1;
        }
        return 0;
    }
}
