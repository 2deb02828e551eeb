class WordCount {
    private int words;
    private int lines;

    void tally(String text) {
        if (text == null || text.length() == 0) {
            return;
        }
        lines = lines + 1;
        boolean inWord = false;
        for (int i = 0; i < text.length(); i++) {
            char c = text.charAt(i);
            if (c == ' ' || c == '\t') {
                inWord = false;
            } else if (!inWord) {
                inWord = true;
                words = words + 1;
            }
        }
    }

    int wordTotal() {
        return words;
    }

    int lineTotal() {
        return lines;
    }
}
