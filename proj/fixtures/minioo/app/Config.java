package app;

public class Config {
    private int verbosity;
    private boolean strict;

    public Config() {
        verbosity = 1;
        strict = false;
    }

    public int getVerbosity() {
        return verbosity;
    }

    public boolean isStrict() {
        return strict;
    }

    public void update(int v, boolean s) {
        verbosity = v;
        strict = s;
    }
}
