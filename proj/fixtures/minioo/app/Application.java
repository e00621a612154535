package app;

import draw.Canvas;
import draw.Renderer;
import draw.Style;
import geom.Circle;
import geom.Point;

/** Wires the demo scene together. */
public class Application {
    private Config config;
    private EventBus bus;

    public Application(Config c) {
        config = c;
        bus = new EventBus();
    }

    public int run() {
        Style style = new Style(7, 2);
        Canvas canvas = new Canvas(style);
        Renderer renderer = new Renderer(canvas);
        Point center = new Point(4, 4);
        Circle circle = new Circle(center, 3);
        renderer.render(circle, style);
        if (config.isStrict()) {
            bus.publish(1);
        }
        return canvas.totalArea();
    }
}
