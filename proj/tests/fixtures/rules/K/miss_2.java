interface Greeting {
    String text();
    int length();
}
