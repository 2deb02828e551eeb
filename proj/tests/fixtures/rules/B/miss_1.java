class NullCheck {
    boolean missing(String s) {
        return s == null;
    }
}
