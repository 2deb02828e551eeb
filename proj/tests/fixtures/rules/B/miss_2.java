class Proper {
    boolean same(String a, String b, int x, int y) {
        return a.equals(b) && x == y;
    }
}
