package draw;

import geom.GeometryUtil;

// Package-private color table.
class Palette {
    int[] colors;
    int size;

    int colorAt(int index) {
        int i = GeometryUtil.clamp(index, 0, size - 1);
        return colors[i];
    }
}
