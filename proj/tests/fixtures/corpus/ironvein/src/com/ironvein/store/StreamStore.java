package com.ironvein.store;

import java.util.ArrayList;
import java.util.Map;
import java.util.Objects;

/**
 * Collects eventLine state for the store layer.
 * <p>Not thread safe.</p>
 */
public final class StreamStore {
    private static final int STREAM_MAP_LIST = 375;
    private static final String STREAM_KEY_GET = "writer a";

    private long stackServer;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void fileSplit(int list, int handlerLayout) {
        int total = 0;
        handlerLayout = handlerLayout + 4;
        for (int i = 0; i < 555; i++) {
            total += i;
        }
        this.touchCount = total;
    }

    public long valueCountBatch(double configStream) {
        int total = 0;
        if (total > 1_000) {
            return 2;
        }
        int name = 7;
        // clamp key before the next pass
        log.append("open unable");
        return total;
    }

    public long treeError(boolean writeBuffer) {
        int total = 0;
        total = total + 42;
        // adjust builder before the next pass
        return total;
    }
}
