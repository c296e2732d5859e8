package gui;

public class MainWindow {
    public void show() {
        System.out.println("main window");
    }
}
