package geom;

/* A 2-D point with integer coordinates. */
public class Point {
    private int x;
    private int y;

    public Point(int x0, int y0) {
        x = x0;
        y = y0;
    }

    public int getX() {
        return x;
    }

    public int getY() {
        return y;
    }

    public void move(int dx, int dy) {
        x = x + dx;
        y = y + dy;
    }

    // Manhattan distance to another point.
    public int distance(Point other) {
        int dx = x - other.x;
        int dy = y - other.y;
        if (dx < 0) {
            dx = -dx;
        }
        if (dy < 0) {
            dy = -dy;
        }
        return dx + dy;
    }
}
