package draw;

public class Layer {
    private int depth;
    private boolean visible;

    public Layer(int d) {
        depth = d;
        visible = true;
    }

    public boolean isVisible() {
        return visible;
    }

    public void toggle() {
        visible = !visible;
    }

    public int getDepth() {
        return depth;
    }
}
