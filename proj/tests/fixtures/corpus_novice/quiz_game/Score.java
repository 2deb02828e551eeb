class Score {
    int bonus;
    int points = 0;

    void award(int amount) {
        points = points + amount;
    }

    int total() {
        return points;
    }
}
