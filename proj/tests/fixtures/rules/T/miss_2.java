class Distinct {
    boolean pick(String s, String t, String u) {
        return s != null || t.equals(u);
    }
}
