package geom;

public class Rect extends Shape {
    private int width;
    private int height;

    public Rect(Point corner, int w, int h) {
        this.origin = corner;
        width = w;
        height = h;
    }

    public int area() {
        return width * height;
    }

    public boolean isSquare() {
        return width == height;
    }
}
