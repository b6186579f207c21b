import pytest
from hypothesis import given, strategies as st

from namecheck.model import (
    Expression,
    ExprForm,
    Extraction,
    Location,
    Source,
    StatementKind,
    TestCase,
    is_java_identifier,
)


@pytest.mark.parametrize("text", ["x", "testFoo", "_a", "$b1", "test_Execute"])
def test_identifiers_accepted(text):
    assert is_java_identifier(text)


@pytest.mark.parametrize("text", ["", "1abc", "class", "a-b", "a b"])
def test_identifiers_rejected(text):
    assert not is_java_identifier(text)


def test_testcase_rejects_bad_name():
    with pytest.raises(ValueError):
        TestCase("not valid", (), "C", (), Location("C.java", 1, 2))


def test_extraction_needs_a_component():
    with pytest.raises(ValueError):
        Extraction(Source.NAME)
    assert Extraction.build(Source.NAME, action=None, predicate="", scenario=None) is None


def test_extraction_rejects_blank_component():
    with pytest.raises(ValueError):
        Extraction(Source.BODY, action="  ")


def test_compound_kinds():
    assert {k for k in StatementKind if k.compound} == {
        StatementKind.IF_ELSE,
        StatementKind.LOOP,
        StatementKind.TRY_CATCH,
    }


def test_calls_are_in_source_order():
    inner = Expression(ExprForm.METHOD_CALL, "b()", "b")
    recv = Expression(ExprForm.METHOD_CALL, "a()", "a")
    outer = Expression(ExprForm.METHOD_CALL, "a().c(b())", "c", receiver=recv, arguments=(inner,))
    assert [c.callee_name for c in outer.calls()] == ["a", "c", "b"]
    assert outer.chain_root() is recv


@given(st.lists(st.sampled_from(["a", "b", "c"]), min_size=1, max_size=6))
def test_chain_root_is_innermost_call(names):
    expr = Expression(ExprForm.OBJECT_REF, "x", "x")
    calls = []
    for n in names:
        expr = Expression(ExprForm.METHOD_CALL, n + "()", n, receiver=expr)
        calls.append(expr)
    assert expr.chain_root() is calls[0]
    assert [c.callee_name for c in expr.calls()] == names
