"""Statement-level model of JUnit tests and the extraction types shared by the engines."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Optional

_JAVA_KEYWORDS = frozenset(
    "abstract assert boolean break byte case catch char class const continue default do "
    "double else enum extends final finally float for goto if implements import instanceof "
    "int interface long native new package private protected public return short static "
    "strictfp super switch synchronized this throw throws transient try void volatile while "
    "true false null".split()
)
_IDENT_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")


def is_java_identifier(text: str) -> bool:
    return bool(_IDENT_RE.fullmatch(text)) and text not in _JAVA_KEYWORDS


class StatementKind(str, enum.Enum):
    DECLARATION = "Declaration"
    METHOD_INVOCATION = "MethodInvocation"
    ASSERTION = "Assertion"
    FAIL = "Fail"
    RETURN = "Return"
    IF_ELSE = "IfElse"
    LOOP = "Loop"
    TRY_CATCH = "TryCatch"
    NEW_OBJECT = "NewObject"
    OTHER = "Other"

    @property
    def compound(self) -> bool:
        return self in (StatementKind.IF_ELSE, StatementKind.LOOP, StatementKind.TRY_CATCH)


class ExprForm(str, enum.Enum):
    METHOD_CALL = "MethodCall"
    OBJECT_REF = "ObjectRef"
    NEW_INSTANCE = "NewInstance"
    LITERAL = "Literal"
    CONDITIONAL = "Conditional"
    OTHER = "Other"


@dataclass(frozen=True)
class Expression:
    """A shallow view of a Java expression.

    ``callee_name`` holds the invoked method for calls, the constructed type for
    ``new`` and the identifier for object references. ``arguments`` holds call
    arguments, the condition/arms of a conditional, or the operands of other
    composite expressions (lambda bodies stay opaque).
    """

    form: ExprForm
    text: str
    callee_name: Optional[str] = None
    receiver: Optional["Expression"] = None
    arguments: tuple["Expression", ...] = ()

    @property
    def is_call(self) -> bool:
        return self.form is ExprForm.METHOD_CALL

    def walk(self) -> Iterator["Expression"]:
        """Pre-order traversal: self, then receiver chain, then arguments."""
        yield self
        if self.receiver is not None:
            yield from self.receiver.walk()
        for arg in self.arguments:
            yield from arg.walk()

    def calls(self) -> list["Expression"]:
        """Method calls in source order (innermost receiver first, then the call, then its args)."""
        out: list[Expression] = []
        if self.receiver is not None:
            out.extend(self.receiver.calls())
        if self.is_call:
            out.append(self)
        for arg in self.arguments:
            out.extend(arg.calls())
        return out

    def chain_root(self) -> "Expression":
        node = self
        while node.receiver is not None and node.receiver.form in (
            ExprForm.METHOD_CALL,
            ExprForm.NEW_INSTANCE,
        ):
            node = node.receiver
        return node


@dataclass(frozen=True)
class Block:
    label: str  # then / else / body / try / catch / finally
    statements: tuple["Statement", ...]


@dataclass(frozen=True)
class Statement:
    kind: StatementKind
    raw_text: str
    span: tuple[int, int]  # byte offsets into the source file
    expression: Optional[Expression] = None
    declared_name: Optional[str] = None
    condition: Optional[Expression] = None
    blocks: tuple[Block, ...] = ()

    @property
    def children(self) -> tuple["Statement", ...]:
        return tuple(s for b in self.blocks for s in b.statements)

    def block(self, label: str) -> Optional[Block]:
        for b in self.blocks:
            if b.label == label:
                return b
        return None

    def iter_all(self) -> Iterator["Statement"]:
        yield self
        for child in self.children:
            yield from child.iter_all()

    def expressions(self) -> Iterator[Expression]:
        if self.condition is not None:
            yield self.condition
        if self.expression is not None:
            yield self.expression


@dataclass(frozen=True)
class Location:
    path: str
    start_line: int
    end_line: int


@dataclass(frozen=True)
class TestCase:
    name: str
    statements: tuple[Statement, ...]
    class_name: str
    methods_under_test: tuple[str, ...]
    location: Location

    def __post_init__(self) -> None:
        if not is_java_identifier(self.name):
            raise ValueError(f"not a Java identifier: {self.name!r}")

    def iter_statements(self) -> Iterator[Statement]:
        for stmt in self.statements:
            yield from stmt.iter_all()

    @property
    def test_id(self) -> str:
        return f"{self.class_name}.{self.name}"


# Not a pytest test class despite the name.
TestCase.__test__ = False  # type: ignore[attr-defined]


class Component(str, enum.Enum):
    ACTION = "action"
    PREDICATE = "predicate"
    SCENARIO = "scenario"


COMPONENTS = (Component.ACTION, Component.PREDICATE, Component.SCENARIO)


class Source(str, enum.Enum):
    NAME = "name"
    BODY = "body"


@dataclass(frozen=True)
class Extraction:
    source: Source
    action: Optional[str] = None
    predicate: Optional[str] = None
    scenario: Optional[str] = None

    def __post_init__(self) -> None:
        for comp in COMPONENTS:
            value = getattr(self, comp.value)
            if value is not None and not value.strip():
                raise ValueError(f"empty {comp.value} component")
        if self.is_empty:
            raise ValueError("an extraction needs at least one component")

    @property
    def is_empty(self) -> bool:
        return self.action is None and self.predicate is None and self.scenario is None

    def get(self, comp: Component) -> Optional[str]:
        return getattr(self, comp.value)

    @classmethod
    def build(cls, source: Source, **components: Optional[str]) -> Optional["Extraction"]:
        """Like the constructor but returns None for an all-empty triple."""
        cleaned = {k: (v if v else None) for k, v in components.items()}
        if all(v is None for v in cleaned.values()):
            return None
        return cls(source, **cleaned)
