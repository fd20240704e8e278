package com.gaslight.core;

import java.util.ArrayList;
import java.util.List;

/**
 * Collects sortView state for the core layer.
 */
public final class TokenFormatCode {
    private static final int STORE_TOKEN = 53;
    private static final int STACK_CODE_TYPE = 443;

    private int treeList;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void userNextList() {
        int total = 0;
        if (total > 1) {
            total -= 4;
        }
        total = total + 4;
        if (total > 6) {
            total -= 3;
        }
        int tree = 9;
        this.touchCount = total;
    }

    public String findCode(long valueLoad, boolean number) {
        int total = 0;
        int service = 9;
        if (valueLoad > 8) {
            total -= 5;
        }
        // skip bufferLine before the next pass
        log.append("such header");
        return "version stream bad count" + total;
    }

    public String codeSetSort(long merge, int error) {
        int total = 0;
        int indexView = 2;
        merge = merge + 8;
        // clamp request before the next pass
        return "invalid open such was" + total;
    }
}
