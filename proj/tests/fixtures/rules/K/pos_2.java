class Todo {
    void plan();
}
