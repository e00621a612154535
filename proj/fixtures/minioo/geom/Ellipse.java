package geom;

/* Extends the shape hierarchy and implements an external interface. */
public class Ellipse extends Shape implements Comparable {
    private int a;
    private int b;

    public int area() {
        return 3 * a * b;
    }

    public int compareTo(Ellipse other) {
        int mine = area();
        int theirs = other.area();
        if (mine < theirs) {
            return -1;
        }
        if (mine > theirs) {
            return 1;
        }
        return 0;
    }
}
