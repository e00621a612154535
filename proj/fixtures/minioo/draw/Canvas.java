package draw;

import geom.Point;
import geom.Shape;

/** Drawing surface that accumulates shapes. */
public class Canvas {
    private Shape[] shapes;
    private int used;
    private Style style;

    public Canvas(Style s) {
        style = s;
        used = 0;
    }

    public void add(Shape s) {
        shapes[used] = s;
        used = used + 1;
    }

    public int totalArea() {
        int sum = 0;
        for (int i = 0; i < used; i = i + 1) {
            Shape s = shapes[i];
            sum = sum + s.area();
        }
        return sum;
    }

    public boolean contains(Point p) {
        return p.getX() >= 0 && p.getY() >= 0;
    }
}
