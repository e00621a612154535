package draw;

import geom.Shape;

public class Renderer {
    private Canvas canvas;
    private Layer layer;

    public Renderer(Canvas c) {
        canvas = c;
    }

    public void render(Shape s, Style st) {
        if (s.area() > 0 && st.getThickness() > 0) {
            canvas.add(s);
        }
    }
}
