class Item {
    private String name;
    private int quantity;

    Item(String name, int quantity) {
        this.name = name;
        this.quantity = quantity;
    }

    String name() {
        return name;
    }

    int quantity() {
        return quantity;
    }

    void restock(int amount) {
        if (amount > 0) {
            quantity = quantity + amount;
        }
    }
}
