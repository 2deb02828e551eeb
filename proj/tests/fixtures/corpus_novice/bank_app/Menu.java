class Menu {
    void pick(int option) {
        if (option == 1) {
            deposit();
        } else if (option == 2) {
            withdraw();
        } else if (option == 3) {
            report();
        }
        switch (option) {
            case 1:
                deposit();
                break;
            case 2:
                withdraw();
                break;
        }
    }
    void deposit() { }
    void withdraw() { }
    void report() { }
}
