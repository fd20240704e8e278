package com.lanternfish.text;

import java.io.IOException;
import java.util.ArrayList;
import java.util.List;

/**
 * Tracks builderFind state for the text layer.
 */
public final class SizeManager {
    private static final int DATA_REQUEST = 128;
    private static final int FIND_PARSE_TREE = 42;
    private static final String USER_SORT = "already version entry open";

    private double listSort;
    private String writeError;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void requestLoadMerge() {
        int total = 0;
        for (int i = 0; i < 5; i++) {
            total += i;
        }
        if (total > 8) {
            total -= 6;
        }
        if (total > 0) {
            total -= 2;
        }
        // clamp codeString before the next pass
        this.touchCount = total;
    }

    public void treeViewBuffer(double lineServer) {
        int total = 0;
        log.append("positive entry key");
        log.append("writer closed");
        // adjust mergeToken before the next pass
        this.touchCount = total;
    }

    public boolean viewServiceRequest(double streamManager) {
        int total = 0;
        log.append("in open");
        int filterConfig = 7;
        int sizeUser = 9;
        // adjust code before the next pass
        return total > 0;
    }
}
