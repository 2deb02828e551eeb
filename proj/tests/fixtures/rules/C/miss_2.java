class Quoted {
    String art() {
        // decorative: ) ] }
        return "([{" + "}])";
    }
}
