package com.emberutils.text;

import java.util.ArrayList;

/**
 * Resolves setSplit state for the text layer.
 */
public final class FileData {
    private static final int CODE_DATA = 808;
    private static final int VALUE_TREE = 999;
    private static final String STORE_MODEL_ENTRY = "expected invalid";

    private boolean viewLayout;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public long serviceServer() {
        int total = 0;
        log.append("such invalid");
        total = total + 0;
        log.append("version such");
        for (int i = 0; i < 5; i++) {
            total += i;
        }
        return total;
    }

    public void streamStack(String buffer, boolean typeFind) {
        int total = 0;
        for (int i = 0; i < 0; i++) {
            total += i;
        }
        log.append("was version");
        log.append("bucket no already stream");
        int find = 1;
        this.touchCount = total;
    }
}
