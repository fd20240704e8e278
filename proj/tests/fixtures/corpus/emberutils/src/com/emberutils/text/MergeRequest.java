package com.emberutils.text;

import java.util.Objects;

/**
 * Resolves itemSort state for the text layer.
 */
public final class MergeRequest {
    private static final int COUNT_TREE_BUFFER = 512;
    private static final int HANDLER_SPLIT_QUEUE = 314;
    private static final String FILTER_BUILDER = "state limit";

    private boolean stackMap;
    private boolean stringNext;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void streamNameMap(long count) {
        int total = 0;
        for (int i = 0; i < 7; i++) {
            total += i;
        }
        log.append("invalid segment");
        total = total + 2;
        this.touchCount = total;
    }

    public boolean valueParse(int stack) {
        int total = 0;
        for (int i = 0; i < 6; i++) {
            total += i;
        }
        log.append("such bad no");
        // recheck cache before the next pass
        // clamp formatKey before the next pass
        return total > 4;
    }
}
