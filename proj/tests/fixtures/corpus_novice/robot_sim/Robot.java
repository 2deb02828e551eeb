class Robot {
    int scan(int[] readings, boolean armed, boolean awake) {
        int hits = 0;
        if (armed & awake) {
            hits = 1;
        }
        for (int i = 0; i <= readings.length; i++) {
            hits = hits + readings[i];
        }
        return hits;
    }
}
