package demo.reflect;

import java.lang.reflect.Constructor;
import java.lang.reflect.Method;

public class Reflection {

    public Object callConstructor(Class c, Class[] classes, Object[] args) {
        Constructor con = null;
        try {
            con = c.getConstructor(classes);
        } catch (Exception e) {
            throw new RuntimeException("Error locating constructor: " + c);
        }
        try {
            return con.newInstance(args);
        } catch (Exception e1) {
            throw new RuntimeException("Error calling constructor: " + c);
        }
    }

    private static Layout getInstance(String className, Object[] list) throws Exception {
        Constructor method = getConstructor(className);
        return (Layout) method.newInstance(list);
    }

    public Object call(Object[] args) throws Throwable {
        try {
            return ctor.getConstructor().newInstance(args);
        } catch (java.lang.reflect.InvocationTargetException e) {
            throw Utils.wrapInvocationException(e);
        }
    }

    public static Object invokeMethod(Object target, String methodName, Object... params) throws Exception {
        Class<?>[] types = new Class<?>[params.length];
        for (int i = 0; i < params.length; i++) {
            types[i] = params[i].getClass();
        }
        Method m = target.getClass().getMethod(methodName, types);
        return m.invoke(target, params);
    }

    public static Object callStatic(Class<?> owner, String name) throws ReflectiveOperationException {
        Method handle = owner.getDeclaredMethod(name);
        handle.setAccessible(true);
        return handle.invoke(null);
    }
}
