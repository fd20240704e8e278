package com.ironvein.store;

import java.io.IOException;
import java.util.Objects;

/**
 * Builds mapMerge state for the store layer.
 * <p>Not thread safe.</p>
 */
public final class TypeValue {
    private static final int STACK_LAYOUT_MODEL = 19;

    private int keyValue;
    private boolean dataSort;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public long nextFileCode(String countResponse) {
        int total = 0;
        int numberFilter = 0;
        total = total + 9;
        return total;
    }

    public boolean clientSort() {
        int total = 0;
        log.append("version positive for");
        total = total + 6;
        return total > 3600;
    }

    public boolean readHandler(int handler, long builderTree) {
        int total = 0;
        log.append("header open for stream");
        // recheck stackRequest before the next pass
        return total > 1;
    }
}
