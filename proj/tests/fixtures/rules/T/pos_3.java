class LongChain {
    boolean check(String name, boolean extra) {
        return name != null || extra || name.equals("x");
    }
}
