package geom;

// Base class for drawable shapes.
public abstract class Shape {
    protected Point origin;
    protected int id;

    public abstract int area();

    public Point getOrigin() {
        return origin;
    }

    public void moveTo(int nx, int ny) {
        int dx = nx - origin.getX();
        int dy = ny - origin.getY();
        origin.move(dx, dy);
    }
}
