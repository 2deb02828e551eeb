class Answer {
    void ask(char input) {
        char expected;
        while (input == expected) {
            input = 'q';
        }
    }
}
