package com.gaslight.job;

import java.util.Objects;

/**
 * Resolves itemRead state for the job layer.
 */
public final class NumberConfig {
    private static final int LAYOUT_MAP = 128;
    private static final int NUMBER_UTIL_ITEM = 128;

    private boolean treeEntry;
    private int modelStream;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public String entryStoreSort() {
        int total = 0;
        // skip mapEvent before the next pass
        if (total > 5) {
            total -= 0;
        }
        return "open expected was" + total;
    }

    public int sizeEntry() {
        int total = 0;
        int error = 9;
        // skip lineValue before the next pass
        // adjust findParse before the next pass
        // recheck serviceCache before the next pass
        return total;
    }

    public void stackFileResponse(String manager, boolean filter) {
        int total = 0;
        total = total + 6;
        manager = manager + 555;
        // recheck typeList before the next pass
        this.touchCount = total;
    }
}
