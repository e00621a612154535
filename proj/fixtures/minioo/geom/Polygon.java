package geom;

/**
 * An open polygon described by its vertex list.
 */
public class Polygon extends Shape {
    private Point[] points;
    private int count;

    public int perimeter() {
        int total = 0;
        for (int i = 1; i < count; i = i + 1) {
            Point a = points[i - 1];
            Point b = points[i];
            total = total + a.distance(b);
        }
        return total;
    }

    public int area() {
        return 0;
    }
}
