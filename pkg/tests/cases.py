"""Bodies that satisfy both a restricted and a more general variant of the same family."""

from namecheck.body_patterns import BodyPatternId as B

RESTRICTED_CASES = [
    ("try { action.execute(); fail(); } catch (E e) { }", B.TRY_CATCH_RESTRICTED, B.TRY_CATCH_GENERALIZED),
    ("try { a.b(); fail(\"x\"); } catch (E e) { assertEquals(1, e.code()); }", B.TRY_CATCH_RESTRICTED, B.TRY_CATCH_GENERALIZED),
    ("try { Foo f = x.make(); fail(); } catch (E e) { }", B.TRY_CATCH_RESTRICTED, B.TRY_CATCH),
    ("try { q.pop(); fail(); } catch (E e) { }", B.TRY_CATCH_RESTRICTED, B.TRY_CATCH),
    ("Q q = new Q();\ntry { q.pop(); fail(); } catch (E e) { }", B.TRY_CATCH, B.TRY_CATCH_GENERALIZED),
    ("Q q = new Q();\ntry { pop(q); } catch (E e) { }", B.TRY_CATCH, B.TRY_CATCH_GENERALIZED),
    ("String p = getSSLProtocol();\nassertNotNull(p);", B.NORMAL_RESTRICTED, B.NORMAL_GENERALIZED),
    ("a.open();\nassertTrue(a.isOpen());", B.NORMAL_RESTRICTED, B.NORMAL_GENERALIZED),
    ("int x = 1;\nint y = f(x);\nassertEquals(2, y);", B.NORMAL_RESTRICTED, B.NORMAL_GENERALIZED),
    ("Foo foo = new Foo();\nfoo.load();\nassertEquals(3, foo.size());", B.NORMAL_RESTRICTED, B.NORMAL_GENERALIZED),
    ("Server s = Server.start();\ns.accept();\ns.stop();", B.NO_ASSERTION, B.NO_ASSERTION_GENERALIZED),
    ("Widget w = new Widget();\nw.render();", B.NO_ASSERTION_SOLE_METHOD, B.NO_ASSERTION_GENERALIZED),
]
