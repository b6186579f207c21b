import pytest
from hypothesis import given, settings

from conftest import java_test
from namecheck.body_patterns import (
    CATALOG,
    FAMILIES,
    PRESENCE,
    BodyPatternId as B,
    all_body_matches,
    assertion_parts,
    match_body,
    satisfies_presence,
)
from namecheck.model import StatementKind
from cases import RESTRICTED_CASES
from strategies import bodies


def triple(match):
    e = match.extraction
    return (e.action, e.predicate, e.scenario)


def check(body, pattern, expected, fields=""):
    m = match_body(java_test(body, fields=fields))
    assert m is not None, body
    assert m.pattern is pattern, (body, m)
    assert triple(m) == expected
    return m


def test_catalog_shape():
    assert len(B) == 17
    assert {p for p, _ in CATALOG} == set(B)
    assert set(PRESENCE) == set(B)
    assert sorted(p for ps in FAMILIES.values() for p in ps) == sorted(B)


# --- samples ---------------------------------------------------------------------


def test_try_catch_sample(sample_tests):
    m = match_body(sample_tests["testExecute_Action"])
    assert (m.pattern, triple(m)) == (B.TRY_CATCH_RESTRICTED, ("execute", None, "action"))


def test_all_assertion_sample(sample_tests):
    m = match_body(sample_tests["testEntries"])
    assert (m.pattern, triple(m)) == (B.ALL_ASSERTION_SINGLE, ("entries", "getSampleElements", "multimap"))


def test_declaration_sample(sample_tests):
    t = sample_tests["testGetSSLProtocol"]
    hits = {m.pattern: triple(m) for m in all_body_matches(t)}
    assert match_body(t).pattern is B.NORMAL_RESTRICTED
    assert hits[B.NORMAL_RESTRICTED] == ("getSSLProtocol", "assertNotNull", "protocol")
    assert hits[B.NORMAL_GENERALIZED] == ("getSSLProtocol", "assertNotNull", None)


def test_empty_body():
    assert match_body(java_test("")) is None


# --- one body per catalog entry ---------------------------------------------------


def test_if_else():
    check(
        "Conn conn = pool.open();\nif (conn.isAlive()) { conn.send(msg); } else { assertEquals(0, conn.pending()); }",
        B.IF_ELSE,
        ("send", "pending", "conn"),
    )


def test_if_without_else_assertion_falls_through():
    m = match_body(java_test("Conn conn = pool.open();\nif (conn.isAlive()) { conn.send(msg); } else { conn.close(); }"))
    assert m is None or m.pattern is not B.IF_ELSE


def test_ternary_if_else():
    check(
        "Conn conn = pool.open();\nint n = ready ? conn.flush() : 0;\nassertEquals(0, conn.pending());",
        B.IF_ELSE,
        ("flush", "pending", "conn"),
    )


def test_loop_while():
    check(
        "while (iter.hasNext()) { Item item = iter.next(); assertTrue(item.isValid()); }",
        B.LOOP,
        ("next", "isValid", "iter"),
    )


def test_loop_for_each_scenario():
    check("for (Item item : items) { assertTrue(item.value()); }", B.LOOP, (None, "value", "items"))


def test_loop_without_assertion_is_not_loop():
    m = match_body(java_test("for (Item item : items) { item.touch(); }"))
    assert m is None or m.pattern is not B.LOOP


def test_all_assertion_single_one_argument():
    check("assertTrue(x);", B.ALL_ASSERTION_SINGLE, (None, None, "x"))


def test_all_assertion_single_with_message():
    check('assertEquals("msg", expected(), store.load());', B.ALL_ASSERTION_SINGLE, ("load", "expected", "store"))


def test_all_assertion_multiple_same_triple():
    m = check(
        "assertEquals(getSampleElements(), multimap.entries());\nassertNotNull(multimap.entries());",
        B.ALL_ASSERTION_MULTIPLE,
        ("entries", "getSampleElements", "multimap"),
    )
    assert any("predicate" in n for n in m.notes)


def test_all_assertion_multiple_nested():
    check(
        "assertTrue(cache.contains(key()));\nassertFalse(cache.contains(other()));",
        B.ALL_ASSERTION_MULTIPLE,
        ("contains", "key", "cache"),
    )


def test_all_assertion_multiple_needs_agreement():
    m = match_body(java_test("assertTrue(a.x());\nassertTrue(b.y());"))
    assert m.pattern is not B.ALL_ASSERTION_MULTIPLE


def test_assertion_plus_declaration_is_not_all_assertion():
    m = match_body(java_test("int x = f();\nassertTrue(x > 0);"))
    assert m.pattern not in (B.ALL_ASSERTION_SINGLE, B.ALL_ASSERTION_MULTIPLE)


def test_no_assertion_sole_method():
    check("Widget w = new Widget();\nw.render();", B.NO_ASSERTION_SOLE_METHOD, ("render", None, "w"))


def test_no_assertion_single_declaration():
    check("Tree tree = parser.parse(tokenize(src));", B.NO_ASSERTION_SINGLE_DECLARATION, ("parse", "tokenize", "tree"))


def test_no_assertion_single_method_invocation():
    check("process(parse(input));", B.NO_ASSERTION_SINGLE_METHOD_INVOCATION, ("process", "parse", None))


def test_no_assertion_single_new_object():
    check("new Widget().configure().render();", B.NO_ASSERTION_SINGLE_NEW_OBJECT, ("render", "configure", "Widget"))


def test_no_assertion_base():
    check(
        "Server server = Server.start();\nserver.accept();\nserver.stop();",
        B.NO_ASSERTION,
        ("start", "accept", "server"),
    )


def test_no_assertion_generalized():
    check(
        "Server server = new Server(8080);\nserver.accept(client());",
        B.NO_ASSERTION_GENERALIZED,
        ("accept", None, "server"),
    )


def test_no_assertion_multiple_declarations():
    check(
        "port = 8080;\nServer server = new Server(port);\nConfig cfg = new Config(server, port);\nrun(port);\nstop(server);",
        B.NO_ASSERTION_MULTIPLE_DECLARATIONS,
        ("stop", None, "server"),
    )


def test_no_assertion_multiple_method_invocations():
    check(
        "x = 1;\nqueue.push(item(1));\nqueue.push(item(2));\nqueue.drain();",
        B.NO_ASSERTION_MULTIPLE_METHOD_INVOCATIONS,
        ("push", "item", None),
    )


def test_try_catch_plain():
    check(
        "Response response = new Response(200);\ntry { extract(response); fail(); } catch (OAuthException e) { }",
        B.TRY_CATCH,
        ("extract", None, "response"),
    )


def test_try_catch_generalized():
    check(
        "try { setup(); obj.run(); fail(); } catch (Exception e) { assertEquals(e.msg(), \"x\"); }",
        B.TRY_CATCH_GENERALIZED,
        ("run", "msg", "obj"),
    )


def test_try_catch_generalized_assertion_after():
    check(
        "Job job = new Job();\ntry { job.prepare(); job.run(); } catch (Exception e) { }\nassertTrue(job.isDone());",
        B.TRY_CATCH_GENERALIZED,
        ("run", "isDone", "job"),
    )


def test_try_without_invocation_before_fail():
    m = match_body(java_test("try { fail(); } catch (Exception e) { }"))
    assert m is None


def test_normal_generalized_long_setup():
    setup = "\n".join(f"Object o{i} = new Object();" for i in range(10))
    check(setup + "\nassertEquals(a.f(), b);", B.NORMAL_GENERALIZED, ("f", "assertEquals", None))


def test_normal_scenario_from_invocation_receiver():
    check("store.open();\nassertTrue(store.isOpen());", B.NORMAL_RESTRICTED, ("isOpen", "assertTrue", "store"))


def test_normal_scenario_from_chained_call():
    m = check(
        'when(mock.simpleMethod()).thenReturn("foo", "foo2");\nassertEquals("foo2", value);',
        B.NORMAL_RESTRICTED,
        (None, "assertEquals", "thenReturn"),
    )
    assert m.extraction.scenario == "thenReturn"


# --- ordering ----------------------------------------------------------------------



@pytest.mark.parametrize("body, restricted, general", RESTRICTED_CASES)
def test_restricted_before_generalized(body, restricted, general):
    t = java_test(body)
    found = [m.pattern for m in all_body_matches(t)]
    assert restricted in found and general in found
    assert match_body(t).pattern is restricted


# --- properties ---------------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(bodies)
def test_presence_rules_and_determinism(body):
    t = java_test(body)
    m = match_body(t)
    if m is not None:
        assert satisfies_presence(m.pattern, m.extraction)
        assert match_body(java_test(body)) == m
        assert all_body_matches(t)[0] == m


@settings(max_examples=200, deadline=None)
@given(bodies)
def test_no_assertion_family_excludes_assertions(body):
    t = java_test(body)
    m = match_body(t)
    has_check = any(s.kind in (StatementKind.ASSERTION, StatementKind.FAIL) for s in t.iter_statements())
    if m is not None and m.pattern in FAMILIES["No Assertion"]:
        assert not has_check


@pytest.mark.parametrize(
    "stmt, method, expected, actual",
    [
        ("assertEquals(a, b);", "assertEquals", "a", "b"),
        ('assertEquals("m", a, b);', "assertEquals", "a", "b"),
        ('assertTrue("m", ok);', "assertTrue", None, "ok"),
        ("assertThat(x, is(y));", "assertThat", "is(y)", "x"),
        ("assertThat(x).isEqualTo(y);", "assertThat", "y", "x"),
    ],
)
def test_assertion_parts(stmt, method, expected, actual):
    parts = assertion_parts(java_test(stmt).statements[0])
    assert parts.method == method
    assert (parts.expected.text if parts.expected else None) == expected
    assert parts.actual.text == actual
