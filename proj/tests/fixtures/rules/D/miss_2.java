class Logic {
    boolean both(boolean a, boolean b) {
        return a && b || !a;
    }
}
