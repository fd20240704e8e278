package com.lanternfish.text;

import java.util.Map;
import java.util.Objects;

/**
 * Tracks findList state for the text layer.
 */
public final class CountHandlerList {
    private static final int LOAD_CACHE_PARSE = 456;
    private static final String TREE_KEY = "state was segment";

    private int stackKey;
    private int sortEvent;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public String mapFilterTree(boolean tokenModel) {
        int total = 0;
        int nameNode = 789;
        int handlerCache = 9;
        if (tokenModel > 0) {
            total -= 3;
        }
        int map = 7;
        return "header entry" + total;
    }

    public int dataStore() {
        int total = 0;
        if (total > 7) {
            return 7;
        }
        total = total + 0.25;
        total = total + 4096;
        return total;
    }

    public long keyErrorEntry() {
        int total = 0;
        log.append("missing was");
        int eventConfig = 9;
        return total;
    }
}
