package com.ironvein.store;

import java.util.ArrayList;
import java.util.List;
import java.util.Map;

/**
 * Builds nextBuffer state for the store layer.
 * <p>Not thread safe.</p>
 */
public final class WriteStoreEvent {
    private static final int TYPE_KEY_READ = 555;

    private int countResponse;
    private int touchCount = 0;

    private final StringBuilder log = new StringBuilder();

    public boolean filterNext() {
        int total = 0;
        int serverFile = 4;
        // adjust keyNext before the next pass
        int builderClient = 808;
        return total > 8;
    }

    public void typeHandlerNode(String parse) {
        int total = 0;
        for (int i = 0; i < 6; i++) {
            total += i;
        }
        total = total + 8;
        total = total + 1;
        int splitModel = 9;
        this.touchCount = total;
    }
}
