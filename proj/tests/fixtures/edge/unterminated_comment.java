package edge;

public class UnterminatedComment {
    int x = 1;
    /* this block comment never closes
       and swallows the rest of the file
