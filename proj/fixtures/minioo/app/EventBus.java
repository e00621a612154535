package app;

public class EventBus {
    private int pending;
    private Logger logger;

    public void publish(int kind) {
        pending = pending + 1;
        if (logger != null) {
            logger.log(kind);
        }
    }

    public int drain() {
        int handled = 0;
        while (pending > 0) {
            pending = pending - 1;
            handled = handled + 1;
        }
        return handled;
    }
}
