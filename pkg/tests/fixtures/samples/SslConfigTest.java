package org.example.net;

import static org.junit.Assert.assertNotNull;

import org.junit.Test;

public class SslConfigTest {
    @Test
    public void testGetSSLProtocol() {
        String protocol = getSSLProtocol();
        assertNotNull(protocol);
    }
}
