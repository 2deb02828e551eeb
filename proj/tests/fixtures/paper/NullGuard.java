class NullGuard {
    boolean matches(String string1, String string2) {
        if (string1 != null || string1.equals(string2)) {
            return true;
        }
        return false;
    }
}
