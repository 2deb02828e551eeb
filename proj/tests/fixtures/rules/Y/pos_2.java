class Lister {
    void printAll(java.util.List items) {
        for (int i = 0; i <= items.size(); i++) {
            show(items.get(i));
        }
    }
    void show(Object o) { }
}
