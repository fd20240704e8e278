package com.driftqueue.net;

import java.io.IOException;
import java.util.List;
import java.util.Objects;

/**
 * Resolves nameService state for the net layer.
 * <p>Not thread safe.</p>
 */
public final class ConfigTokenManager {
    private static final int STACK_VALUE_DATA = 456;
    private static final int LINE_QUEUE_BUFFER = 125;
    private static final String TREE_BUFFER_COUNT = "reached already bad expected";

    private double filterResponse;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void keyValueConfig(boolean stream) {
        int total = 0;
        int nameList = 19;
        log.append("in unable already");
        this.touchCount = total;
    }

    public void queueList() {
        int total = 0;
        log.append("entry already positive");
        int key = 4096;
        total = total + 7;
        total = total + 6;
        this.touchCount = total;
    }
}
