package geom;

public class GeometryUtil {
    public static int clamp(int v, int lo, int hi) {
        if (v < lo) {
            return lo;
        }
        if (v > hi) {
            return hi;
        }
        return v;
    }

    public static int signum(int v) {
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }

    public static int axisCode(int axis) {
        switch (axis) {
            case 0:
                return 1;
            case 1:
                return 2;
            default:
                return 0;
        }
    }
}
