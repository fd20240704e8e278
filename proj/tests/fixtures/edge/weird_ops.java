package edge;

import java.util.List;

public class WeirdOps {
    @SuppressWarnings("unchecked")
    static int shiftAll(int a, int b, List<List<String>> grid, int... rest) {
        a >>>= 2; a <<= 1; a >>= 3;
        a += b--; a -= ++b; a *= 2; a /= 1; a %= 7;
        a &= b; a |= b; a ^= b;
        boolean t = a != b && a <= b || a >= b;
        int c = t ? a : b;
        Runnable r = () -> System.out.println(c);
        List<String> row = grid.isEmpty() ? List.of() : grid.get(0);
        row.forEach(System.out::println);
        return a >>> 1;
    }
}
