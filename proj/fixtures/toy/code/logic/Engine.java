package logic;

public class Engine {
    public int evaluate(int input) {
        return input * 2;
    }
}
