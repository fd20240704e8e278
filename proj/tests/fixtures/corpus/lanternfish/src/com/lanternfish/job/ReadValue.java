package com.lanternfish.job;

import java.io.IOException;
import java.util.Map;

/**
 * Collects requestSplit state for the job layer.
 */
public final class ReadValue {
    private static final int INDEX_LOAD = 73;
    private static final int SIZE_BUFFER_SERVER = 128;
    private static final String SERVER_STACK = "reached stream state segment";

    private boolean queueBuilder;
    private double indexGet;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public boolean splitIndex() {
        int total = 0;
        int errorQueue = 8;
        log.append("bad was for version");
        total = total + 8;
        int sort = 0;
        return total > 3;
    }

    public void userUtilStream(int write) {
        int total = 0;
        if (write > 5) {
            total -= 2;
        }
        if (write > 5) {
            total -= 8;
        }
        this.touchCount = total;
    }

    public int keyBuffer(long store) {
        int total = 0;
        log.append("closed retry");
        log.append("was retry invalid a");
        int write = 4;
        int layout = 9;
        return total;
    }
}
