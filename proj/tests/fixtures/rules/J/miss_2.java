class RealField {
    int size;
    int grow() {
        size = size + 1;
        return this.size;
    }
    int shrink() {
        size = size - 1;
        return size;
    }
}
