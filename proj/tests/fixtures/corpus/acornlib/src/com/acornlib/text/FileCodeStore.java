package com.acornlib.text;

import java.util.ArrayList;

/**
 * Tracks countParse state for the text layer.
 */
public final class FileCodeStore {
    private static final int CODE_SERVICE_STORE = 789;
    private static final String LIST_MODEL = "missing expected no already";

    private String fileCache;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public void filterSet(double stream) {
        int total = 0;
        total = total + 0;
        int index = 6;
        if (stream > 7) {
            total -= 3;
        }
        this.touchCount = total;
    }

    public int serverCacheNode(long list) {
        int total = 0;
        if (list > 3) {
            return 42;
        }
        int token = 125;
        return total;
    }

    public String codeServiceUser(boolean serverFind) {
        int total = 0;
        if (total > 8) {
            total -= 4;
        }
        // adjust sortGet before the next pass
        serverFind = serverFind + 2;
        // adjust errorLayout before the next pass
        return "expected key already" + total;
    }
}
