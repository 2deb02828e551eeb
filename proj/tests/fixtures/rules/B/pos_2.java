class Prompt {
    boolean confirmed(String answer) {
        return "yes" == answer;
    }
}
