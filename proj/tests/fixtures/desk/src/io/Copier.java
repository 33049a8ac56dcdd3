package desk.io;

import java.io.*;
import java.nio.file.*;

/* Assorted copy helpers. */
public class Copier {

    public void copyFileTo(String fromPath, String toPath) throws IOException {
        Path from = Paths.get(fromPath);
        Path to = Paths.get(toPath);
        Files.copy(from, to, StandardCopyOption.REPLACE_EXISTING);
    }

    private static boolean duplicate(File src, File dst) {
        try (BufferedInputStream reader = new BufferedInputStream(new FileInputStream(src));
             BufferedOutputStream writer = new BufferedOutputStream(new FileOutputStream(dst))) {
            int b;
            while ((b = reader.read()) != -1) {
                writer.write(b);
            }
            return true;
        } catch (IOException ex) {
            return false;
        }
    }
}
