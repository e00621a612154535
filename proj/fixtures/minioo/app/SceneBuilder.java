package app;

import draw.Canvas;
import geom.Point;
import geom.Rect;

public class SceneBuilder {
    private Canvas target;
    private int built;

    public SceneBuilder(Canvas canvas) {
        target = canvas;
    }

    public void addRect(int x, int y, int w, int h) {
        Point corner = new Point(x, y);
        Rect rect = new Rect(corner, w, h);
        target.add(rect);
        built = built + 1;
    }

    public int builtCount() {
        return built;
    }
}
