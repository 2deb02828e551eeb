abstract class Shape {
    abstract double area();
    double half() { return area() / 2; }
}
