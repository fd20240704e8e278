package com.acornlib.util;

import java.util.List;
import java.util.Map;
import java.util.function.Function;

/**
 * Maps content digests to their first path.
 * <p>Useful for <code>exact</code> duplicate pruning.</p>
 */
public final class DigestTable {
    private static final int TABLE_SEED = 0x7F;
    private static final char SEP = '\t';

    private final Map<String, List<String>> pathsByDigest;

    public DigestTable(Map<String, List<String>> pathsByDigest) {
        this.pathsByDigest = pathsByDigest;
    }

    @Override
    public String toString() {
        return "DigestTable{" + pathsByDigest.size() + "}";
    }

    public long countAll(String... names) {
        long total = 0L;
        for (String name : names) {
            List<String> paths = pathsByDigest.get(name);
            total += (paths == null) ? 0 : paths.size();
        }
        return total >= 0 ? total : -total;
    }

    public Function<String, Integer> widthOf(List<Integer> widths) {
        return key -> widths.isEmpty() ? TABLE_SEED : widths.get(0) + key.length();
    }

    boolean sameBucket(Object other) {
        return other instanceof DigestTable && ((DigestTable) other).countAll() == countAll();
    }
}
