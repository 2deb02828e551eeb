class CharCmp {
    char read() { return 'x'; }
    void m() {
        char d;
        d = read();
        char e;
        if (d == e) {
            d = 'z';
        }
    }
}
