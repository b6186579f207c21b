"""Body side: the ordered catalog of test-body patterns and their triple extraction."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .model import (
    COMPONENTS,
    Component,
    Expression,
    ExprForm,
    Extraction,
    Source,
    Statement,
    StatementKind,
    TestCase,
)


class BodyPatternId(str, enum.Enum):
    IF_ELSE = "IfElse"
    LOOP = "Loop"
    TRY_CATCH = "TryCatch"
    TRY_CATCH_RESTRICTED = "TryCatchRestricted"
    TRY_CATCH_GENERALIZED = "TryCatchGeneralized"
    ALL_ASSERTION_SINGLE = "AllAssertionSingle"
    ALL_ASSERTION_MULTIPLE = "AllAssertionMultiple"
    NORMAL_RESTRICTED = "NormalRestricted"
    NORMAL_GENERALIZED = "NormalGeneralized"
    NO_ASSERTION = "NoAssertion"
    NO_ASSERTION_GENERALIZED = "NoAssertionGeneralized"
    NO_ASSERTION_SOLE_METHOD = "NoAssertionSoleMethod"
    NO_ASSERTION_SINGLE_DECLARATION = "NoAssertionSingleDeclaration"
    NO_ASSERTION_SINGLE_METHOD_INVOCATION = "NoAssertionSingleMethodInvocation"
    NO_ASSERTION_SINGLE_NEW_OBJECT = "NoAssertionSingleNewObject"
    NO_ASSERTION_MULTIPLE_METHOD_INVOCATIONS = "NoAssertionMultipleMethodInvocations"
    NO_ASSERTION_MULTIPLE_DECLARATIONS = "NoAssertionMultipleDeclarations"


REQ, OPT, NONE = "required", "optional", "absent"

# Per-pattern presence rules in (action, predicate, scenario) order.
# Every returned extraction is checked against this table.
PRESENCE: dict[BodyPatternId, tuple[str, str, str]] = {
    BodyPatternId.IF_ELSE: (REQ, OPT, REQ),
    BodyPatternId.LOOP: (OPT, OPT, OPT),
    BodyPatternId.TRY_CATCH: (REQ, OPT, REQ),
    BodyPatternId.TRY_CATCH_RESTRICTED: (REQ, OPT, OPT),
    BodyPatternId.TRY_CATCH_GENERALIZED: (REQ, OPT, OPT),
    BodyPatternId.ALL_ASSERTION_SINGLE: (OPT, OPT, OPT),
    BodyPatternId.ALL_ASSERTION_MULTIPLE: (OPT, OPT, OPT),
    BodyPatternId.NORMAL_RESTRICTED: (OPT, REQ, OPT),
    BodyPatternId.NORMAL_GENERALIZED: (OPT, REQ, OPT),
    BodyPatternId.NO_ASSERTION: (REQ, REQ, REQ),
    BodyPatternId.NO_ASSERTION_GENERALIZED: (REQ, NONE, REQ),
    BodyPatternId.NO_ASSERTION_SOLE_METHOD: (REQ, NONE, OPT),
    BodyPatternId.NO_ASSERTION_SINGLE_DECLARATION: (REQ, OPT, REQ),
    BodyPatternId.NO_ASSERTION_SINGLE_METHOD_INVOCATION: (REQ, OPT, OPT),
    BodyPatternId.NO_ASSERTION_SINGLE_NEW_OBJECT: (REQ, REQ, REQ),
    BodyPatternId.NO_ASSERTION_MULTIPLE_METHOD_INVOCATIONS: (REQ, OPT, OPT),
    BodyPatternId.NO_ASSERTION_MULTIPLE_DECLARATIONS: (REQ, NONE, REQ),
}


def satisfies_presence(pattern: BodyPatternId, extraction: Extraction) -> bool:
    for comp, rule in zip(COMPONENTS, PRESENCE[pattern]):
        value = extraction.get(comp)
        if rule == REQ and value is None:
            return False
        if rule == NONE and value is not None:
            return False
    return True


@dataclass(frozen=True)
class BodyMatch:
    pattern: BodyPatternId
    extraction: Extraction
    notes: tuple[str, ...] = ()


# --- expression helpers --------------------------------------------------------

_SINGLE_VALUE_ASSERTS = frozenset(
    {"assertTrue", "assertFalse", "assertNull", "assertNotNull", "fail", "assertThrows", "assertDoesNotThrow"}
)


def object_name(expr: Optional[Expression]) -> Optional[str]:
    """Variable name for references, constructed type for ``new``, callee for calls."""
    if expr is None:
        return None
    if expr.form in (ExprForm.OBJECT_REF, ExprForm.NEW_INSTANCE, ExprForm.METHOD_CALL):
        return expr.callee_name or None
    return None


def receiver_object(call: Optional[Expression]) -> Optional[str]:
    if call is None or call.receiver is None:
        return None
    if call.receiver.form in (ExprForm.OBJECT_REF, ExprForm.NEW_INSTANCE):
        return object_name(call.receiver)
    return None


def _is_message(expr: Expression) -> bool:
    return expr.form is ExprForm.LITERAL and expr.text.startswith('"')


@dataclass(frozen=True)
class AssertionParts:
    method: str
    expected: Optional[Expression]
    actual: Optional[Expression]

    @property
    def invocation(self) -> Optional[Expression]:
        """Call in the actual position, falling back to the expected position."""
        for expr in (self.actual, self.expected):
            if expr is not None and expr.is_call:
                return expr
        return None


def assertion_parts(stmt: Statement) -> Optional[AssertionParts]:
    expr = stmt.expression
    if expr is None or not expr.is_call:
        return None
    root = expr.chain_root()
    method = root.callee_name or ""
    if root is not expr:
        # fluent form: assertThat(actual).isEqualTo(expected)
        actual = root.arguments[0] if root.arguments else None
        expected = expr.arguments[0] if expr.arguments else None
        return AssertionParts(method, expected, actual)
    args = list(root.arguments)
    if method in _SINGLE_VALUE_ASSERTS:
        if len(args) >= 2 and _is_message(args[0]):
            args = args[1:]
        return AssertionParts(method, None, args[0] if args else None)
    if len(args) >= 3 and _is_message(args[0]):
        args = args[1:]
    if method == "assertThat":
        return AssertionParts(method, args[1] if len(args) > 1 else None, args[0] if args else None)
    if len(args) == 1:
        return AssertionParts(method, None, args[0])
    return AssertionParts(method, args[0] if args else None, args[1] if len(args) > 1 else None)


def _primary_call(stmt: Statement) -> Optional[Expression]:
    """The outermost call of a simple statement (a declaration's initializer included)."""
    expr = stmt.expression
    if expr is not None and expr.is_call:
        return expr
    return None


def _first_call(stmt: Statement) -> Optional[Expression]:
    for expr in stmt.expressions():
        calls = expr.calls()
        if calls:
            return calls[0]
    return None


def _all_calls(statements: Iterable[Statement]) -> list[Expression]:
    out = []
    for top in statements:
        for stmt in top.iter_all():
            for expr in stmt.expressions():
                out.extend(expr.calls())
    return out


def _inner_argument_call(call: Expression) -> Optional[Expression]:
    for arg in call.arguments:
        calls = arg.calls()
        if calls:
            return calls[-1] if arg.is_call else calls[0]
    return None


def _is_check(stmt: Statement) -> bool:
    return stmt.kind in (StatementKind.ASSERTION, StatementKind.FAIL)


def _has_check(statements: Iterable[Statement]) -> bool:
    return any(_is_check(s) for top in statements for s in top.iter_all())


def _leading_var(stmts: Sequence[Statement]) -> Optional[str]:
    if stmts and stmts[0].kind is StatementKind.DECLARATION:
        return stmts[0].declared_name
    return None


def _ext(**parts: Optional[str]) -> Optional[Extraction]:
    return Extraction.build(Source.BODY, **parts)


def _name_of(call: Optional[Expression]) -> Optional[str]:
    return call.callee_name if call is not None else None


# --- If Else -------------------------------------------------------------------


def match_if_else(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    for i, stmt in enumerate(stmts):
        if stmt.kind is StatementKind.IF_ELSE:
            return _if_statement_form(stmts, i)
        if stmt.kind is StatementKind.DECLARATION and stmt.expression is not None:
            if stmt.expression.form is ExprForm.CONDITIONAL:
                return _conditional_form(stmts, i)
    return None


def _sole_prior_declaration(stmts: Sequence[Statement], i: int) -> Optional[str]:
    prior = [s for s in stmts[:i] if s.kind is StatementKind.DECLARATION]
    if i == 0 or stmts[0].kind is not StatementKind.DECLARATION or len(prior) != 1:
        return None
    return prior[0].declared_name


def _if_statement_form(stmts: Sequence[Statement], i: int) -> Optional[Extraction]:
    scenario = _sole_prior_declaration(stmts, i)
    stmt = stmts[i]
    then, other = stmt.block("then"), stmt.block("else")
    if scenario is None or then is None or other is None or not then.statements:
        return None
    action = _first_call(then.statements[0])
    if action is None or _is_check(then.statements[0]):
        return None
    checks = [s for top in other.statements for s in top.iter_all() if s.kind is StatementKind.ASSERTION]
    if not checks:
        return None
    parts = assertion_parts(checks[0])
    return _ext(
        action=action.callee_name,
        predicate=_name_of(parts.invocation) if parts else None,
        scenario=scenario,
    )


def _conditional_form(stmts: Sequence[Statement], i: int) -> Optional[Extraction]:
    scenario = _sole_prior_declaration(stmts, i)
    cond = stmts[i].expression
    if scenario is None or cond is None or len(cond.arguments) < 2:
        return None
    consequence = cond.arguments[1]
    if not consequence.is_call:
        return None
    later = [s for s in stmts[i + 1 :] if s.kind is StatementKind.ASSERTION]
    if not later:
        return None
    parts = assertion_parts(later[0])
    return _ext(
        action=consequence.callee_name,
        predicate=_name_of(parts.invocation) if parts else None,
        scenario=scenario,
    )


# --- Loop ----------------------------------------------------------------------


def _condition_object(cond: Optional[Expression]) -> Optional[str]:
    if cond is None:
        return None
    calls = cond.calls()
    if calls and receiver_object(calls[0]):
        return receiver_object(calls[0])
    for node in cond.walk():
        if node.form is ExprForm.OBJECT_REF and node.receiver is None:
            return node.callee_name
    return None


def match_loop(test: TestCase) -> Optional[Extraction]:
    for stmt in test.statements:
        if stmt.kind is not StatementKind.LOOP:
            continue
        inner = [s for child in stmt.children for s in child.iter_all()]
        checks = [s for s in inner if s.kind is StatementKind.ASSERTION]
        if not checks:
            continue
        action = None
        for s in inner:
            if not _is_check(s) and not s.kind.compound:
                action = _first_call(s)
                if action is not None:
                    break
        parts = assertion_parts(checks[0])
        return _ext(
            action=_name_of(action),
            predicate=_name_of(parts.invocation) if parts else None,
            scenario=_condition_object(stmt.condition),
        )
    return None


# --- All Assertion ---------------------------------------------------------------


def _only_assertions(test: TestCase) -> bool:
    return bool(test.statements) and all(s.kind is StatementKind.ASSERTION for s in test.statements)


def _single_triple(parts: AssertionParts) -> dict[str, Optional[str]]:
    actual = parts.actual
    action = scenario = None
    if actual is not None and actual.is_call:
        action = actual.callee_name
        scenario = receiver_object(actual)
    elif actual is not None and actual.form is ExprForm.OBJECT_REF:
        scenario = actual.callee_name
    return {"action": action, "predicate": object_name(parts.expected), "scenario": scenario}


def match_all_assertion_single(test: TestCase) -> Optional[Extraction]:
    if not _only_assertions(test) or len(test.statements) != 1:
        return None
    parts = assertion_parts(test.statements[0])
    return _ext(**_single_triple(parts)) if parts else None


def _multiple_triple(parts: AssertionParts) -> dict[str, Optional[str]]:
    actual = parts.actual
    if actual is not None and actual.is_call:
        inner = _inner_argument_call(actual)
        if inner is not None:
            return {
                "action": actual.callee_name,
                "predicate": inner.callee_name,
                "scenario": receiver_object(actual),
            }
    return _single_triple(parts)


def match_all_assertion_multiple(test: TestCase) -> Optional[tuple[Extraction, tuple[str, ...]]]:
    if not _only_assertions(test) or len(test.statements) < 2:
        return None
    triples = []
    for stmt in test.statements:
        parts = assertion_parts(stmt)
        if parts is None:
            return None
        triples.append(_multiple_triple(parts))
    shared = False
    notes = []
    for comp in COMPONENTS:
        values = [t[comp.value] for t in triples]
        if values[0] is not None and all(v is not None and v.lower() == values[0].lower() for v in values):
            shared = True
        elif len({v for v in values}) > 1:
            notes.append(f"assertions disagree on {comp.value}: {', '.join(str(v) for v in values)}")
    if not shared:
        return None
    ext = _ext(**triples[0])
    return (ext, tuple(notes)) if ext else None


# --- No Assertion ---------------------------------------------------------------


def _no_assertion_body(test: TestCase) -> bool:
    stmts = test.statements
    if not stmts or _has_check(stmts):
        return False
    return not any(s.kind is StatementKind.TRY_CATCH for top in stmts for s in top.iter_all())


def match_no_assertion_sole_method(test: TestCase) -> Optional[Extraction]:
    calls = _all_calls(test.statements)
    if len(calls) != 1:
        return None
    return _ext(action=calls[0].callee_name, scenario=receiver_object(calls[0]) or _leading_var(test.statements))


def match_no_assertion_single_declaration(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    if len(stmts) != 1 or stmts[0].kind is not StatementKind.DECLARATION:
        return None
    call = _primary_call(stmts[0])
    if call is None:
        return None
    return _ext(
        action=call.callee_name,
        predicate=_name_of(_inner_argument_call(call)),
        scenario=stmts[0].declared_name,
    )


def match_no_assertion_single_method_invocation(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    if len(stmts) != 1 or stmts[0].kind is not StatementKind.METHOD_INVOCATION:
        return None
    call = _primary_call(stmts[0])
    if call is None:
        return None
    return _ext(
        action=call.callee_name,
        predicate=_name_of(_inner_argument_call(call)),
        scenario=receiver_object(call),
    )


def match_no_assertion_single_new_object(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    if len(stmts) != 1 or stmts[0].kind is not StatementKind.NEW_OBJECT:
        return None
    expr = stmts[0].expression
    chain = []
    while expr is not None and expr.is_call:
        chain.append(expr.callee_name)
        expr = expr.receiver
    if expr is None or expr.form is not ExprForm.NEW_INSTANCE or len(chain) < 2:
        return None
    return _ext(action=chain[0], predicate=chain[-1], scenario=expr.callee_name)


def _statement_calls(stmts: Sequence[Statement]) -> list[tuple[int, Expression]]:
    return [(i, c) for i, s in enumerate(stmts) if (c := _primary_call(s)) is not None]


def match_no_assertion_base(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    scenario = _leading_var(stmts)
    if len(stmts) < 3 or scenario is None:
        return None
    seq = _statement_calls(stmts)
    if len(seq) < 2:
        return None
    return _ext(action=seq[0][1].callee_name, predicate=seq[1][1].callee_name, scenario=scenario)


def match_no_assertion_generalized(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    scenario = _leading_var(stmts)
    if len(stmts) < 2 or scenario is None:
        return None
    later = [c for i, c in _statement_calls(stmts) if i > 0]
    if not later:
        return None
    return _ext(action=later[0].callee_name, scenario=scenario)


def match_no_assertion_multiple_declarations(test: TestCase) -> Optional[Extraction]:
    declared = [s.declared_name for s in test.statements if s.kind is StatementKind.DECLARATION and s.declared_name]
    if len(declared) < 2:
        return None
    refs: Counter[str] = Counter()
    for top in test.statements:
        for stmt in top.iter_all():
            for expr in stmt.expressions():
                for node in expr.walk():
                    if node.form is ExprForm.OBJECT_REF and node.receiver is None and node.callee_name in declared:
                        refs[node.callee_name] += 1
    if not refs:
        return None
    best = max(declared, key=lambda name: (refs[name], -declared.index(name)))
    calls = _all_calls(test.statements)

    def takes(call: Expression) -> bool:
        return any(a.form is ExprForm.OBJECT_REF and a.callee_name == best for a in call.arguments)

    action = next((c for c in calls if takes(c)), None) or next(
        (c for c in calls if receiver_object(c) == best), None
    )
    return _ext(action=_name_of(action), scenario=best)


def match_no_assertion_multiple_method_invocations(test: TestCase) -> Optional[Extraction]:
    calls = _all_calls(test.statements)
    if len(calls) < 2:
        return None
    counts = Counter(c.callee_name for c in calls)
    order = [c.callee_name for c in calls]
    best = max(counts, key=lambda name: (counts[name], -order.index(name)))
    predicate = None
    for call in calls:
        if call.callee_name == best:
            predicate = _name_of(_inner_argument_call(call))
            if predicate:
                break
    return _ext(action=best, predicate=predicate)


# --- Try Catch --------------------------------------------------------------------


def _invocation_statement(stmt: Statement) -> bool:
    return stmt.kind in (
        StatementKind.METHOD_INVOCATION,
        StatementKind.DECLARATION,
        StatementKind.NEW_OBJECT,
    ) and _primary_call(stmt) is not None


def _catch_predicate(try_stmt: Statement) -> Optional[str]:
    for block in try_stmt.blocks:
        if block.label != "catch":
            continue
        for top in block.statements:
            for stmt in top.iter_all():
                if stmt.kind is StatementKind.ASSERTION:
                    parts = assertion_parts(stmt)
                    if parts and parts.invocation is not None:
                        return parts.invocation.callee_name
    return None


def _try_block(stmt: Statement) -> tuple[Statement, ...]:
    block = stmt.block("try")
    return block.statements if block else ()


def match_try_catch_restricted(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    if len(stmts) != 1 or stmts[0].kind is not StatementKind.TRY_CATCH:
        return None
    body = _try_block(stmts[0])
    if len(body) != 2 or not _invocation_statement(body[0]) or body[1].kind is not StatementKind.FAIL:
        return None
    call = _primary_call(body[0])
    return _ext(action=call.callee_name, predicate=_catch_predicate(stmts[0]), scenario=receiver_object(call))


def match_try_catch(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    if not stmts or stmts[-1].kind is not StatementKind.TRY_CATCH or len(stmts) > 2:
        return None
    if len(stmts) == 2 and stmts[0].kind is not StatementKind.DECLARATION:
        return None
    body = _try_block(stmts[-1])
    if not body or not _invocation_statement(body[0]):
        return None
    if len(body) > 2 or (len(body) == 2 and body[1].kind is not StatementKind.FAIL):
        return None
    call = _primary_call(body[0])
    return _ext(
        action=call.callee_name,
        predicate=_catch_predicate(stmts[-1]),
        scenario=receiver_object(call) or _leading_var(stmts),
    )


def match_try_catch_generalized(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    index = next((i for i, s in enumerate(stmts) if s.kind is StatementKind.TRY_CATCH), None)
    if index is None:
        return None
    body = _try_block(stmts[index])
    fail_at = next((i for i, s in enumerate(body) if s.kind is StatementKind.FAIL), len(body))
    candidates = [s for s in body[:fail_at] if _invocation_statement(s)] or [
        s for s in body if _invocation_statement(s)
    ]
    if not candidates:
        return None
    call = _primary_call(candidates[-1])
    predicate = _catch_predicate(stmts[index])
    if predicate is None:
        for stmt in stmts[index + 1 :]:
            if stmt.kind is StatementKind.ASSERTION:
                parts = assertion_parts(stmt)
                if parts and parts.invocation is not None:
                    predicate = parts.invocation.callee_name
                    break
    leading = _leading_var(stmts) if index > 0 else None
    return _ext(action=call.callee_name, predicate=predicate, scenario=receiver_object(call) or leading)


# --- Normal --------------------------------------------------------------------


def _invocation_scenario(stmts: Sequence[Statement]) -> Optional[str]:
    """Receiver of the first invocation statement; its callee when the receiver is itself a call."""
    for stmt in stmts:
        if stmt.kind is StatementKind.METHOD_INVOCATION and stmt.expression is not None:
            call = stmt.expression
            return receiver_object(call) or call.callee_name
    return None


def _normal_action(stmts: Sequence[Statement], parts: AssertionParts) -> Optional[str]:
    if stmts and stmts[0].kind is StatementKind.DECLARATION:
        call = _primary_call(stmts[0])
        if call is not None:
            return call.callee_name
    return _name_of(parts.invocation)


def match_normal_restricted(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    if not 1 <= len(stmts) <= 3 or stmts[-1].kind is not StatementKind.ASSERTION:
        return None
    prefix = stmts[:-1]
    if any(s.kind.compound or _is_check(s) for s in prefix):
        return None
    parts = assertion_parts(stmts[-1])
    if parts is None:
        return None
    return _ext(
        action=_normal_action(stmts, parts),
        predicate=parts.method,
        scenario=_invocation_scenario(prefix) or _leading_var(prefix),
    )


def match_normal_generalized(test: TestCase) -> Optional[Extraction]:
    stmts = test.statements
    k = len(stmts)
    while k > 0 and stmts[k - 1].kind is StatementKind.ASSERTION:
        k -= 1
    if k == len(stmts) or _has_check(stmts[:k]):
        return None
    parts = assertion_parts(stmts[k])
    if parts is None:
        return None
    return _ext(
        action=_normal_action(stmts, parts),
        predicate=parts.method,
        scenario=_invocation_scenario(stmts[:k]),
    )


# --- dispatch ----------------------------------------------------------------------

Matcher = Callable[[TestCase], object]


def _guard(pre: Callable[[TestCase], bool], fn: Matcher) -> Matcher:
    return lambda test: fn(test) if pre(test) else None


CATALOG: tuple[tuple[BodyPatternId, Matcher], ...] = (
    (BodyPatternId.IF_ELSE, match_if_else),
    (BodyPatternId.LOOP, match_loop),
    (BodyPatternId.ALL_ASSERTION_SINGLE, match_all_assertion_single),
    (BodyPatternId.ALL_ASSERTION_MULTIPLE, match_all_assertion_multiple),
    (BodyPatternId.NO_ASSERTION_SOLE_METHOD, _guard(_no_assertion_body, match_no_assertion_sole_method)),
    (BodyPatternId.NO_ASSERTION_SINGLE_DECLARATION, _guard(_no_assertion_body, match_no_assertion_single_declaration)),
    (
        BodyPatternId.NO_ASSERTION_SINGLE_METHOD_INVOCATION,
        _guard(_no_assertion_body, match_no_assertion_single_method_invocation),
    ),
    (BodyPatternId.NO_ASSERTION_SINGLE_NEW_OBJECT, _guard(_no_assertion_body, match_no_assertion_single_new_object)),
    (BodyPatternId.NO_ASSERTION, _guard(_no_assertion_body, match_no_assertion_base)),
    (BodyPatternId.NO_ASSERTION_GENERALIZED, _guard(_no_assertion_body, match_no_assertion_generalized)),
    (
        BodyPatternId.NO_ASSERTION_MULTIPLE_DECLARATIONS,
        _guard(_no_assertion_body, match_no_assertion_multiple_declarations),
    ),
    (
        BodyPatternId.NO_ASSERTION_MULTIPLE_METHOD_INVOCATIONS,
        _guard(_no_assertion_body, match_no_assertion_multiple_method_invocations),
    ),
    (BodyPatternId.TRY_CATCH_RESTRICTED, match_try_catch_restricted),
    (BodyPatternId.TRY_CATCH, match_try_catch),
    (BodyPatternId.TRY_CATCH_GENERALIZED, match_try_catch_generalized),
    (BodyPatternId.NORMAL_RESTRICTED, match_normal_restricted),
    (BodyPatternId.NORMAL_GENERALIZED, match_normal_generalized),
)

FAMILIES: dict[str, tuple[BodyPatternId, ...]] = {
    "If Else": (BodyPatternId.IF_ELSE,),
    "Loop": (BodyPatternId.LOOP,),
    "All Assertion": (BodyPatternId.ALL_ASSERTION_SINGLE, BodyPatternId.ALL_ASSERTION_MULTIPLE),
    "No Assertion": tuple(p for p, _ in CATALOG if p.value.startswith("NoAssertion")),
    "Try Catch": (
        BodyPatternId.TRY_CATCH_RESTRICTED,
        BodyPatternId.TRY_CATCH,
        BodyPatternId.TRY_CATCH_GENERALIZED,
    ),
    "Normal (Restricted)": (BodyPatternId.NORMAL_RESTRICTED,),
    "Normal (Generalized)": (BodyPatternId.NORMAL_GENERALIZED,),
}


def _run(pattern: BodyPatternId, matcher: Matcher, test: TestCase) -> Optional[BodyMatch]:
    result = matcher(test)
    notes: tuple[str, ...] = ()
    if isinstance(result, tuple):
        result, notes = result
    if result is None or not satisfies_presence(pattern, result):
        return None
    return BodyMatch(pattern, result, notes)


def match_body(test: TestCase) -> Optional[BodyMatch]:
    """First catalog pattern the body satisfies, or None."""
    for pattern, matcher in CATALOG:
        hit = _run(pattern, matcher, test)
        if hit is not None:
            return hit
    return None


def all_body_matches(test: TestCase) -> list[BodyMatch]:
    """Every pattern the body satisfies, in catalog order (match_body returns the head)."""
    return [hit for pattern, matcher in CATALOG if (hit := _run(pattern, matcher, test)) is not None]


def family_of(pattern: BodyPatternId) -> str:
    for family, members in FAMILIES.items():
        if pattern in members:
            return family
    raise KeyError(pattern)


def component_values(extraction: Extraction) -> dict[Component, Optional[str]]:
    return {c: extraction.get(c) for c in COMPONENTS}
