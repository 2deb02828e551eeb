class Init {
    Init(); {
        setup();
    }
    void setup() { }
}
