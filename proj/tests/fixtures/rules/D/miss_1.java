class Bits {
    int mask(int bits, int mask) {
        return bits & mask;
    }
}
