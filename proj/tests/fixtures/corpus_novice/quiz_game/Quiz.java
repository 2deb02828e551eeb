class Quiz {
    void run() {
        char reply;
        char Y;
        do {
            System.out.println("Do you want to continue?");
            reply = (char) System.in.read();
        } while (reply != Y);
    }
}
