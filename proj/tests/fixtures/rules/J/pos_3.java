class Trimmer {
    String tidy(String text) {
        String t = text.trim;
        return t;
    }
}
