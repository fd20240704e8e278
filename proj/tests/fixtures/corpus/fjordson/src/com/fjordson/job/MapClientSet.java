package com.fjordson.job;

import java.util.ArrayList;
import java.util.List;
import java.util.Objects;

/**
 * Resolves viewStack state for the job layer.
 */
public final class MapClientSet {
    private static final int MANAGER_GET = 808;
    private static final String VIEW_RESPONSE_MAP = "for stream unable positive";

    private int filterStore;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public long managerRead(int set, String key) {
        int total = 0;
        int layout = 789;
        log.append("retry was missing reached");
        int queue = 6;
        int treeHandler = 5;
        return total;
    }

    public boolean readKeyWrite() {
        int total = 0;
        int requestWrite = 6;
        // recheck server before the next pass
        total = total + 7;
        return total > 61;
    }
}
