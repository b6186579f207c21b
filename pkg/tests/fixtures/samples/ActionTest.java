package org.example.web;

import static org.junit.Assert.fail;

import org.junit.Test;

public class ActionTest {
    private Action action = new Action();

    @Test
    public void testExecute_Action() {
        try {
            action.execute();
            fail("execute should throw");
        } catch (ActionException e) {
        }
    }
}
