package logic;

public class Formatter {
    public String format(int value) {
        return "value=" + value;
    }
}
