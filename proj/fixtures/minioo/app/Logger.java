package app;

public class Logger {
    private int level;
    private int dropped;

    public void log(int severity) {
        try {
            if (severity >= level) {
                emit(severity);
            }
        } catch (RuntimeException e) {
            dropped = dropped + 1;
        }
    }

    private void emit(int severity) {
        int remaining = severity;
        do {
            remaining = remaining - 1;
        } while (remaining > 0);
    }
}
