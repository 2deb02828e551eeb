class Pick {
    int choose(int x) {
        if { x > 10 } {
            return 1;
        } else {
            return 0;
        }
    }
}
