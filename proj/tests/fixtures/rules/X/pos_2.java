class Lone {
    void act(int x) {
        switch (x) {
            case 9:
                done();
                break;
        }
    }
    void done() { }
}
