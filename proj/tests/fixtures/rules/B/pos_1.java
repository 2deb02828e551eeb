class Login {
    boolean same(String a, String b) {
        if (a == b) {
            return true;
        }
        return false;
    }
}
