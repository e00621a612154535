package geom;

public class Circle extends Shape {
    private int radius;

    public Circle(Point center, int r) {
        this.origin = center;
        radius = r;
    }

    public int area() {
        // crude integer approximation of pi * r^2
        return 3 * radius * radius;
    }

    public int diameter() {
        return 2 * radius;
    }
}
