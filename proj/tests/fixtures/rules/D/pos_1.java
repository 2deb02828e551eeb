class Range {
    boolean inside(int a, int b) {
        if (a > 0 & b > 0) {
            return true;
        }
        return false;
    }
}
