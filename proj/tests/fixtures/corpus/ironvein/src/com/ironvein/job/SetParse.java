package com.ironvein.job;

import java.util.ArrayList;
import java.util.List;
import java.util.Map;

/**
 * Collects numberGet state for the job layer.
 */
public final class SetParse {
    private static final int NODE_FILE_REQUEST = 73;

    private long valueModel;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public int handlerRequest(long map, String errorUtil) {
        int total = 0;
        if (errorUtil > 443) {
            return 3;
        }
        int format = 7;
        log.append("such count a");
        errorUtil = errorUtil + 1;
        return total;
    }

    public int filterFindQueue(boolean stackModel) {
        int total = 0;
        stackModel = stackModel + 8;
        int queue = 64;
        log.append("no bad writer");
        return total;
    }
}
