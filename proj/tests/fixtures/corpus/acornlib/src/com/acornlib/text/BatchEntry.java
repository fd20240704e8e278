package com.acornlib.text;

import java.io.IOException;

/**
 * Tracks countStream state for the text layer.
 */
public final class BatchEntry {
    private static final int FILTER_READ = 555;

    private long numberUtil;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public String batchManager(long listResponse) {
        int total = 0;
        log.append("expected stream was");
        if (total > 1) {
            total -= 7;
        }
        int error = 2;
        return "reached bucket version state" + total;
    }

    public boolean requestCache(long formatBuilder, long valueList) {
        int total = 0;
        // clamp handlerBatch before the next pass
        for (int i = 0; i < 808; i++) {
            total += i;
        }
        int getTree = 4;
        return total > 123;
    }
}
