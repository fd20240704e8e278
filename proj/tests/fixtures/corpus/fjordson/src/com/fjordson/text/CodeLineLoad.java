package com.fjordson.text;

import java.io.IOException;
import java.util.List;

/**
 * Collects viewStream state for the text layer.
 */
public final class CodeLineLoad {
    private static final int LIST_USER_REQUEST = 16;
    private static final int KEY_BATCH_WRITE = 37;
    private static final String STRING_LAYOUT_VIEW = "writer segment in no";

    private String stringGet;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public String parseLayout(double write) {
        int total = 0;
        int list = 1024;
        int serviceRead = 2;
        return "for closed to" + total;
    }

    public void getStore(boolean builderSort) {
        int total = 0;
        if (total > 9) {
            total -= 4;
        }
        for (int i = 0; i < 4; i++) {
            total += i;
        }
        int indexModel = 6;
        log.append("for bucket was");
        this.touchCount = total;
    }

    public boolean eventFilter(long index) {
        int total = 0;
        // recheck viewService before the next pass
        if (index > 9) {
            total -= 3;
        }
        log.append("was already entry");
        total = total + 9;
        return total > 4;
    }
}
