from pathlib import Path

import pytest

from conftest import java_test
from namecheck.model import ExprForm, StatementKind
from namecheck.source import (
    SourceIOError,
    extract_methods_under_test,
    parse_project,
    parse_source,
    parse_tests_from_text,
)


def _write(root: Path, rel: str, text: str) -> Path:
    path = root / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return path


def test_junit4_test_found(tmp_path):
    _write(
        tmp_path,
        "ActionTest.java",
        "public class ActionTest { @Test public void testExecute_Action() { action.execute(); } }",
    )
    tests, diags = parse_project(tmp_path)
    assert [t.name for t in tests] == ["testExecute_Action"]
    assert diags == []


def test_private_helper_is_not_a_test(tmp_path):
    _write(
        tmp_path,
        "FooTest.java",
        "public class FooTest { private Foo buildFixture() { return new Foo(); } }",
    )
    tests, _ = parse_project(tmp_path)
    assert tests == []


def test_junit3_style(tmp_path):
    _write(
        tmp_path,
        "LegacyTest.java",
        """public class LegacyTest extends TestCase {
            public void testAdd() { calc.add(1); }
            public void helper() { }
            public void testWithArg(int x) { }
            private void testPrivate() { }
        }""",
    )
    tests, _ = parse_project(tmp_path)
    assert [t.name for t in tests] == ["testAdd"]


def test_declaration_sample_statements(sample_tests):
    t = sample_tests["testGetSSLProtocol"]
    assert [s.kind for s in t.statements] == [StatementKind.DECLARATION, StatementKind.ASSERTION]
    assert t.statements[0].declared_name == "protocol"


def test_fail_inside_try_is_fail_kind(sample_tests):
    t = sample_tests["testExecute_Action"]
    (tc,) = t.statements
    assert tc.kind is StatementKind.TRY_CATCH
    assert [s.kind for s in tc.block("try").statements] == [StatementKind.METHOD_INVOCATION, StatementKind.FAIL]


def test_fail_outside_try_is_assertion():
    t = java_test('fail("nope");')
    assert t.statements[0].kind is StatementKind.ASSERTION


@pytest.mark.parametrize(
    "stmt, kind",
    [
        ("Assert.assertEquals(1, x);", StatementKind.ASSERTION),
        ("assertThat(x).isEqualTo(3);", StatementKind.ASSERTION),
        ("assertThat(x, is(3));", StatementKind.ASSERTION),
        ("x = 3;", StatementKind.OTHER),
        ("new Foo().bar();", StatementKind.NEW_OBJECT),
        ("new Foo();", StatementKind.NEW_OBJECT),
        ("foo.bar();", StatementKind.METHOD_INVOCATION),
        ("return;", StatementKind.RETURN),
        ("while (it.hasNext()) { it.next(); }", StatementKind.LOOP),
        ("do { x++; } while (x < 3);", StatementKind.LOOP),
        ("if (a) { b(); }", StatementKind.IF_ELSE),
        ("try (Res r = open()) { r.use(); }", StatementKind.TRY_CATCH),
        ("throw new RuntimeException();", StatementKind.OTHER),
    ],
)
def test_statement_kinds(stmt, kind):
    assert java_test(stmt).statements[0].kind is kind


def test_compound_statements_count_once():
    t = java_test("int a = 1;\nif (a > 0) { foo(); bar(); } else { baz(); }\nfor (X x : xs) { x.go(); }")
    assert len(t.statements) == 3
    assert len(t.statements[1].children) == 3
    assert all(not s.children for s in t.statements[0:1])


def test_lambda_is_opaque():
    t = java_test("run(() -> { foo(); });")
    arg = t.statements[0].expression.arguments[0]
    assert arg.form is ExprForm.OTHER
    assert arg.calls() == []


def test_raw_text_is_a_slice_of_the_file(samples_dir):
    path = samples_dir / "OAuthExtractorTest.java"
    data = path.read_bytes()
    pf = parse_source(data, path.name)
    (cls,) = pf.classes
    for _, stmts, _ in cls.test_methods:
        for top in stmts:
            for stmt in top.iter_all():
                start, end = stmt.span
                assert data[start:end].decode() == stmt.raw_text


def test_parsing_is_deterministic(samples_dir):
    a, _ = parse_project(samples_dir)
    b, _ = parse_project(samples_dir)
    assert a == b


def test_syntax_error_is_reported_not_fatal(tmp_path):
    _write(tmp_path, "a/BrokenTest.java", "public class BrokenTest { @Test public void testX() { foo( } }")
    _write(tmp_path, "b/GoodTest.java", "public class GoodTest { @Test public void testY() { y(); } }")
    tests, diags = parse_project(tmp_path)
    assert [t.name for t in tests] == ["testY"]
    assert len(diags) == 1 and diags[0].path == "a/BrokenTest.java"


def test_missing_root_raises(tmp_path):
    with pytest.raises(SourceIOError):
        parse_project(tmp_path / "nope")


def test_include_exclude(tmp_path):
    _write(tmp_path, "src/ATest.java", "class ATest { @Test public void testA() { a(); } }")
    _write(tmp_path, "gen/BTest.java", "class BTest { @Test public void testB() { b(); } }")
    tests, _ = parse_project(tmp_path, exclude=("gen/*",))
    assert [t.name for t in tests] == ["testA"]


def test_methods_under_test_from_invocations():
    src = "class FooTest { @Test public void testGetSSLProtocol() { foo.getSSLProtocol(); } }"
    (t,) = parse_tests_from_text(src)
    assert "getSSLProtocol" in t.methods_under_test


def test_methods_under_test_empty_for_assertions_only():
    src = "class FooTest { @Test public void testNothing() { assertTrue(true); } }"
    (t,) = parse_tests_from_text(src)
    assert t.methods_under_test == ()


def test_methods_under_test_descriptive_example(sample_tests):
    assert "getGraphNode" in sample_tests["testGetGraphNode"].methods_under_test


def test_methods_under_test_from_subject_class(tmp_path):
    _write(
        tmp_path,
        "org/x/Parser.java",
        "package org.x; public class Parser { public Tree parse(String s) { return null; } private void hidden() {} }",
    )
    _write(
        tmp_path,
        "org/x/ParserTest.java",
        "package org.x; public class ParserTest { @Test public void testTree() { assertTrue(true); } }",
    )
    tests, _ = parse_project(tmp_path)
    (t,) = tests
    assert t.methods_under_test == ("parse",)


def test_extract_methods_under_test_without_index():
    pf = parse_source(b"class ATest { @Test public void testRun() { a.run(); a.stop(); } }")
    assert extract_methods_under_test(pf.classes[0]) == ["run"]
