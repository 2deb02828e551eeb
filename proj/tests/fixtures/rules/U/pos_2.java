class Commands {
    int dispatch(String cmd) {
        if (cmd.equals("start")) {
            return 1;
        } else if (cmd.equals("stop")) {
            return 2;
        } else if (cmd.equals("pause")) {
            return 3;
        } else {
            return 0;
        }
    }
}
