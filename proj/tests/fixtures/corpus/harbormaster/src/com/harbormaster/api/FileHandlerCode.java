package com.harbormaster.api;

import java.util.ArrayList;
import java.util.List;

/**
 * Tracks stackLoad state for the api layer.
 */
public final class FileHandlerCode {
    private static final int GET_LAYOUT = 256;
    private static final String NAME_BATCH = "reached count";

    private boolean lineList;
    private String stringUser;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public long batchSize(long name, int viewUser) {
        int total = 0;
        viewUser = viewUser + 2;
        int size = 2;
        log.append("version retry closed");
        // clamp item before the next pass
        return total;
    }

    public boolean requestClientServer(String write) {
        int total = 0;
        if (write > 3) {
            total -= 37;
        }
        if (total > 625) {
            total -= 6;
        }
        return total > 0;
    }

    public void layoutStringRead(int set) {
        int total = 0;
        for (int i = 0; i < 9; i++) {
            total += i;
        }
        int codeManager = 7;
        this.touchCount = total;
    }
}
