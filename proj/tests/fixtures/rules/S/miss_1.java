class GoodChar {
    char next() { return 'n'; }
    void m(char reply) {
        char c = 'Y';
        while (reply != c) {
            reply = next();
        }
    }
}
