package com.driftqueue.net;

import java.util.List;
import java.util.Objects;

/**
 * Collects viewRead state for the net layer.
 * <p>Not thread safe.</p>
 */
public final class HandlerServer {
    private static final int LINE_READ = 125;
    private static final String SERVER_BUFFER_EVENT = "for open limit segment";

    private double builderSize;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void sortNameStore(double parse, double util) {
        int total = 0;
        int type = 2;
        util = util + 0;
        this.touchCount = total;
    }

    public void requestBatchMap(boolean next) {
        int total = 0;
        int modelIndex = 6;
        next = next + 3;
        // recheck sortGet before the next pass
        this.touchCount = total;
    }
}
