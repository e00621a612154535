package geom;

public class Vector2 {
    private int x;
    private int y;

    public Vector2(int x0, int y0) {
        x = x0;
        y = y0;
    }

    public Vector2 scale(int k) {
        return new Vector2(x * k, y * k);
    }

    public Vector2 scale(int kx, int ky) {
        return new Vector2(x * kx, y * ky);
    }

    public int dot(Vector2 o) {
        return x * o.x + y * o.y;
    }
}
