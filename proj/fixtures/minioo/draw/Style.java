package draw;

public class Style {
    public int color;
    private int thickness;

    public Style(int c, int t) {
        color = c;
        thickness = t;
    }

    public int getThickness() {
        return thickness;
    }

    public void setThickness(int t) {
        if (t > 0) {
            thickness = t;
        }
    }
}
