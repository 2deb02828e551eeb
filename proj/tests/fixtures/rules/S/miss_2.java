class MixedCmp {
    void m(int code) {
        char u;
        if (code == 5) {
            u = 'x';
        }
        use(u);
    }
    void use(char c) { }
}
