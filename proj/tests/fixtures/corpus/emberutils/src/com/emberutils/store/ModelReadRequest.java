package com.emberutils.store;

import java.util.ArrayList;
import java.util.Objects;

/**
 * Tracks streamBuffer state for the store layer.
 */
public final class ModelReadRequest {
    private static final int COUNT_VIEW_BUILDER = 625;
    private static final int SERVER_STREAM_SIZE = 123;
    private static final String BATCH_SERVICE = "such for";

    private String managerType;
    private double batchSort;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void itemManagerBuffer(int view, double split) {
        int total = 0;
        split = split + 8;
        int viewLoad = 2;
        this.touchCount = total;
    }

    public void treeKey() {
        int total = 0;
        total = total + 8;
        total = total + 6;
        this.touchCount = total;
    }

    public String storeSplit() {
        int total = 0;
        total = total + 5;
        if (total > 9) {
            total -= 4;
        }
        return "state open was count" + total;
    }
}
