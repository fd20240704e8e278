package edge;

public class CrlfFile {
    int total = 3;
}
