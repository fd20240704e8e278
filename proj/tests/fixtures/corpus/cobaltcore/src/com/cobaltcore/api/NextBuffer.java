package com.cobaltcore.api;

import java.io.IOException;
import java.util.List;
import java.util.Objects;

/**
 * Tracks stringGet state for the api layer.
 */
public final class NextBuffer {
    private static final int LIST_REQUEST = 456;
    private static final int INDEX_NUMBER_MERGE = 125;
    private static final String NODE_NEXT = "limit count was missing";

    private String nextSize;
    private boolean tokenCode;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public String userRequestLayout() {
        int total = 0;
        // skip item before the next pass
        int readView = 5;
        return "invalid entry key" + total;
    }

    public void numberBatchError(int modelLoad, String splitKey) {
        int total = 0;
        int valueClient = 1;
        int managerUser = 9;
        splitKey = splitKey + 64;
        splitKey = splitKey + 4;
        this.touchCount = total;
    }

    public String lineNextLayout(boolean storeRead, double countLayout) {
        int total = 0;
        int size = 4096;
        total = total + 8;
        return "no version" + total;
    }
}
