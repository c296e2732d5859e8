package gui;

public class Dialog {
    public void open() {
        System.out.println("dialog");
    }
}
