class Control {
    boolean running() { return true; }
    void drive(int steps) {
        boolean going = false;
        while (going = running()) {
            for (int i = 0, i < steps, i++) {
                move(i);
            }
        }
    }
    void move(int i) { }
}
