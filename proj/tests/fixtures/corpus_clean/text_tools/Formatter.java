class Formatter {
    static final String BULLET = "- ";

    String bullet(String item) {
        if (item == null) {
            return BULLET;
        }
        return BULLET + item.trim();
    }

    String shout(String item) {
        if (item != null && item.equals("important")) {
            return item.toUpperCase();
        }
        return item;
    }
}
