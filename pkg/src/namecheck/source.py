"""Java test source -> statement-level TestCase model."""

from __future__ import annotations

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fnmatch import fnmatch
from pathlib import Path
from typing import Optional, Sequence

import tree_sitter_java
from tree_sitter import Language, Node, Parser

from .model import (
    Block,
    Expression,
    ExprForm,
    Location,
    Statement,
    StatementKind,
    TestCase,
    is_java_identifier,
)

log = logging.getLogger(__name__)

JAVA = Language(tree_sitter_java.language())

ASSERT_NAME_RE = re.compile(r"assert[A-Z]\w*")
TEST_ANNOTATIONS = frozenset({"Test", "ParameterizedTest", "RepeatedTest"})

_LITERALS = frozenset(
    {
        "string_literal",
        "text_block",
        "character_literal",
        "decimal_integer_literal",
        "hex_integer_literal",
        "octal_integer_literal",
        "binary_integer_literal",
        "decimal_floating_point_literal",
        "hex_floating_point_literal",
        "true",
        "false",
        "null_literal",
        "class_literal",
    }
)
_LOOPS = frozenset({"while_statement", "for_statement", "enhanced_for_statement", "do_statement"})


class SourceIOError(OSError):
    """The source root cannot be read."""


@dataclass(frozen=True)
class Diagnostic:
    path: str
    line: int
    message: str


@dataclass
class ParsedClass:
    name: str
    package: str
    path: str
    imports: tuple[str, ...]
    superclass: Optional[str]
    public_methods: tuple[str, ...]
    test_methods: list[tuple[str, tuple[Statement, ...], Location]] = field(default_factory=list)

    @property
    def qualified_name(self) -> str:
        return f"{self.package}.{self.name}" if self.package else self.name


@dataclass
class ParsedFile:
    path: str
    classes: list[ParsedClass]
    diagnostics: list[Diagnostic]


def is_assertion_name(name: Optional[str]) -> bool:
    return bool(name) and (name == "fail" or bool(ASSERT_NAME_RE.fullmatch(name)))


def _parser() -> Parser:
    return Parser(JAVA)


def _text(node: Node) -> str:
    return node.text.decode("utf-8", errors="replace")


def _simple_type_name(node: Optional[Node]) -> Optional[str]:
    if node is None:
        return None
    if node.type == "generic_type":
        for child in node.named_children:
            if child.type in ("type_identifier", "scoped_type_identifier"):
                return _simple_type_name(child)
    if node.type == "scoped_type_identifier":
        return _text(node.named_children[-1])
    text = _text(node)
    return text.split("<", 1)[0].rsplit(".", 1)[-1]


def convert_expression(node: Node) -> Expression:
    """Map a tree-sitter expression node onto the shallow Expression view."""
    kind = node.type
    text = _text(node)
    if kind == "method_invocation":
        obj = node.child_by_field_name("object")
        args = node.child_by_field_name("arguments")
        return Expression(
            ExprForm.METHOD_CALL,
            text,
            callee_name=_text(node.child_by_field_name("name")),
            receiver=convert_expression(obj) if obj is not None else None,
            arguments=tuple(convert_expression(a) for a in args.named_children) if args else (),
        )
    if kind == "identifier" or kind == "this" or kind == "super":
        return Expression(ExprForm.OBJECT_REF, text, callee_name=text)
    if kind == "field_access":
        obj = node.child_by_field_name("object")
        return Expression(
            ExprForm.OBJECT_REF,
            text,
            callee_name=_text(node.child_by_field_name("field")),
            receiver=convert_expression(obj) if obj is not None else None,
        )
    if kind == "object_creation_expression":
        args = node.child_by_field_name("arguments")
        return Expression(
            ExprForm.NEW_INSTANCE,
            text,
            callee_name=_simple_type_name(node.child_by_field_name("type")),
            arguments=tuple(convert_expression(a) for a in args.named_children) if args else (),
        )
    if kind in _LITERALS:
        return Expression(ExprForm.LITERAL, text)
    if kind == "parenthesized_expression" and node.named_children:
        return convert_expression(node.named_children[0])
    if kind == "cast_expression":
        value = node.child_by_field_name("value")
        if value is not None:
            return convert_expression(value)
    if kind == "ternary_expression":
        parts = [node.child_by_field_name(f) for f in ("condition", "consequence", "alternative")]
        return Expression(
            ExprForm.CONDITIONAL,
            text,
            arguments=tuple(convert_expression(p) for p in parts if p is not None),
        )
    if kind in ("lambda_expression", "method_reference"):
        return Expression(ExprForm.OTHER, text)
    # composite: keep operands so nested calls stay visible
    operands = tuple(
        convert_expression(c)
        for c in node.named_children
        if c.type not in ("type_identifier", "generic_type", "integral_type", "comment")
        and not c.type.endswith("_type")
    )
    return Expression(ExprForm.OTHER, text, arguments=operands)


class _StatementBuilder:
    def __init__(self, source: bytes):
        self.source = source

    def raw(self, node: Node) -> str:
        return self.source[node.start_byte : node.end_byte].decode("utf-8", errors="replace")

    def block_statements(self, node: Optional[Node], in_try: bool = False) -> tuple[Statement, ...]:
        if node is None:
            return ()
        if node.type != "block":
            stmt = self.statement(node, in_try)
            return (stmt,) if stmt is not None else ()
        out = []
        for child in node.named_children:
            stmt = self.statement(child, in_try)
            if stmt is not None:
                out.append(stmt)
        return tuple(out)

    def statement(self, node: Node, in_try: bool = False) -> Optional[Statement]:
        kind = node.type
        span = (node.start_byte, node.end_byte)
        raw = self.raw(node)
        if kind in ("comment", "line_comment", "block_comment"):
            return None
        if kind == "local_variable_declaration":
            declarator = node.child_by_field_name("declarator")
            name = value = None
            if declarator is not None:
                name = _text(declarator.child_by_field_name("name"))
                value = declarator.child_by_field_name("value")
            expr = (
                convert_expression(value)
                if value is not None
                else Expression(ExprForm.OTHER, "")
            )
            return Statement(StatementKind.DECLARATION, raw, span, expression=expr, declared_name=name)
        if kind == "expression_statement":
            inner = node.named_children[0] if node.named_children else None
            if inner is None:
                return Statement(StatementKind.OTHER, raw, span)
            expr = convert_expression(inner)
            return Statement(self._expression_kind(expr, in_try), raw, span, expression=expr)
        if kind == "return_statement":
            inner = node.named_children[0] if node.named_children else None
            expr = convert_expression(inner) if inner is not None else Expression(ExprForm.OTHER, "")
            return Statement(StatementKind.RETURN, raw, span, expression=expr)
        if kind == "if_statement":
            cond = node.child_by_field_name("condition")
            blocks = [Block("then", self.block_statements(node.child_by_field_name("consequence"), in_try))]
            alt = node.child_by_field_name("alternative")
            if alt is not None:
                blocks.append(Block("else", self.block_statements(alt, in_try)))
            return Statement(
                StatementKind.IF_ELSE,
                raw,
                span,
                condition=convert_expression(cond) if cond is not None else None,
                blocks=tuple(blocks),
            )
        if kind in _LOOPS:
            if kind == "enhanced_for_statement":
                cond = node.child_by_field_name("value")
            else:
                cond = node.child_by_field_name("condition")
            body = node.child_by_field_name("body")
            return Statement(
                StatementKind.LOOP,
                raw,
                span,
                condition=convert_expression(cond) if cond is not None else None,
                blocks=(Block("body", self.block_statements(body, in_try)),),
            )
        if kind in ("try_statement", "try_with_resources_statement"):
            blocks = [Block("try", self.block_statements(node.child_by_field_name("body"), True))]
            for child in node.named_children:
                if child.type == "catch_clause":
                    blocks.append(Block("catch", self.block_statements(child.child_by_field_name("body"), in_try)))
                elif child.type == "finally_clause":
                    body = next((c for c in child.named_children if c.type == "block"), None)
                    blocks.append(Block("finally", self.block_statements(body, in_try)))
            return Statement(StatementKind.TRY_CATCH, raw, span, blocks=tuple(blocks))
        return Statement(StatementKind.OTHER, raw, span)

    @staticmethod
    def _expression_kind(expr: Expression, in_try: bool) -> StatementKind:
        root = expr.chain_root()
        if expr.is_call and root.form is ExprForm.METHOD_CALL and is_assertion_name(root.callee_name):
            if root.callee_name == "fail" and in_try:
                return StatementKind.FAIL
            return StatementKind.ASSERTION
        if expr.form is ExprForm.NEW_INSTANCE or (expr.is_call and root.form is ExprForm.NEW_INSTANCE):
            return StatementKind.NEW_OBJECT
        if expr.is_call:
            return StatementKind.METHOD_INVOCATION
        return StatementKind.OTHER


def _annotation_names(method: Node) -> set[str]:
    names = set()
    for child in method.children:
        if child.type != "modifiers":
            continue
        for mod in child.named_children:
            if mod.type in ("marker_annotation", "annotation"):
                name = mod.child_by_field_name("name")
                if name is not None:
                    names.add(_text(name).rsplit(".", 1)[-1])
    return names


def _modifier_words(method: Node) -> set[str]:
    for child in method.children:
        if child.type == "modifiers":
            return {_text(c) for c in child.children if c.type not in ("marker_annotation", "annotation")}
    return set()


def _is_test_method(method: Node, superclass: Optional[str]) -> bool:
    if _annotation_names(method) & TEST_ANNOTATIONS:
        return True
    # JUnit 3: public void testXxx() in a class extending a test base
    name = _text(method.child_by_field_name("name"))
    params = method.child_by_field_name("parameters")
    return (
        superclass is not None
        and "Test" in superclass
        and name.startswith("test")
        and "public" in _modifier_words(method)
        and method.child_by_field_name("type") is not None
        and method.child_by_field_name("type").type == "void_type"
        and (params is None or not params.named_children)
    )


def _first_error_line(node: Node) -> Optional[int]:
    if not node.has_error:
        return None
    stack = [node]
    while stack:
        cur = stack.pop()
        if cur.type == "ERROR" or cur.is_missing:
            return cur.start_point[0] + 1
        stack.extend(reversed(cur.children))
    return node.start_point[0] + 1


def parse_source(source: bytes, path: str = "<memory>") -> ParsedFile:
    """Parse one Java compilation unit into classes and their test methods."""
    tree = _parser().parse(source)
    root = tree.root_node
    diagnostics = []
    err_line = _first_error_line(root)
    if err_line is not None:
        diagnostics.append(Diagnostic(path, err_line, "syntax error; affected methods skipped"))

    package = ""
    imports = []
    for child in root.named_children:
        if child.type == "package_declaration":
            ident = next((c for c in child.named_children if c.type in ("scoped_identifier", "identifier")), None)
            package = _text(ident) if ident is not None else ""
        elif child.type == "import_declaration":
            imports.append(_text(child).removeprefix("import").removesuffix(";").strip())

    builder = _StatementBuilder(source)
    classes: list[ParsedClass] = []

    def visit_class(node: Node) -> None:
        name = _text(node.child_by_field_name("name"))
        sup = node.child_by_field_name("superclass")
        superclass = None
        if sup is not None and sup.named_children:
            superclass = _simple_type_name(sup.named_children[0])
        body = node.child_by_field_name("body")
        cls = ParsedClass(name, package, path, tuple(imports), superclass, ())
        classes.append(cls)
        public = []
        for member in body.named_children if body is not None else ():
            if member.type in ("class_declaration", "enum_declaration"):
                if member.type == "class_declaration":
                    visit_class(member)
                continue
            if member.type != "method_declaration":
                continue
            mname = _text(member.child_by_field_name("name"))
            if "public" in _modifier_words(member):
                public.append(mname)
            if not _is_test_method(member, superclass):
                continue
            mbody = member.child_by_field_name("body")
            if mbody is None or member.has_error or not is_java_identifier(mname):
                continue
            stmts = builder.block_statements(mbody)
            loc = Location(path, member.start_point[0] + 1, member.end_point[0] + 1)
            cls.test_methods.append((mname, stmts, loc))
        cls.public_methods = tuple(public)

    for child in root.named_children:
        if child.type == "class_declaration":
            visit_class(child)
    return ParsedFile(path, classes, diagnostics)


def extract_methods_under_test(
    test_class: ParsedClass, index: Optional[dict[str, ParsedClass]] = None
) -> list[str]:
    """Candidate production methods a test class exercises.

    Invoked (non-assertion) methods whose name occurs inside some test name, plus
    the public methods of ``FooTest``'s subject ``Foo`` when ``index`` (qualified
    name -> class) can resolve it through the package or an import.
    """
    test_names = [name.lower() for name, _, _ in test_class.test_methods]
    seen: dict[str, None] = {}
    for _, stmts, _ in test_class.test_methods:
        for stmt in stmts:
            for node in stmt.iter_all():
                for expr in node.expressions():
                    for call in expr.calls():
                        callee = call.callee_name
                        if not callee or is_assertion_name(callee):
                            continue
                        low = callee.lower()
                        if any(low in t for t in test_names):
                            seen.setdefault(callee, None)
    if index:
        subject = re.sub(r"Tests?$", "", test_class.name)
        if subject and subject != test_class.name:
            candidates = [f"{test_class.package}.{subject}" if test_class.package else subject]
            candidates += [imp for imp in test_class.imports if imp.rsplit(".", 1)[-1] == subject]
            for qn in candidates:
                target = index.get(qn)
                if target is not None:
                    for m in target.public_methods:
                        seen.setdefault(m, None)
                    break
    return list(seen)


def _read_file(path: Path, rel: str) -> ParsedFile:
    try:
        data = path.read_bytes()
        data.decode("utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        return ParsedFile(rel, [], [Diagnostic(rel, 0, f"unreadable: {exc}")])
    return parse_source(data, rel)


def iter_java_files(
    root: Path, include: Sequence[str] = ("*.java",), exclude: Sequence[str] = ()
) -> list[Path]:
    files = []
    for path in sorted(root.rglob("*.java")):
        rel = path.relative_to(root).as_posix()
        if not any(fnmatch(rel, pat) or fnmatch(path.name, pat) for pat in include):
            continue
        if any(fnmatch(rel, pat) for pat in exclude):
            continue
        files.append(path)
    return files


def parse_project(
    source_root: Path | str,
    include: Sequence[str] = ("*.java",),
    exclude: Sequence[str] = (),
    jobs: int = 1,
) -> tuple[list[TestCase], list[Diagnostic]]:
    """Parse every Java file under ``source_root``; returns tests and diagnostics."""
    root = Path(source_root)
    if not root.is_dir():
        raise SourceIOError(f"cannot read source root: {root}")
    files = iter_java_files(root, include, exclude)
    rels = [p.relative_to(root).as_posix() for p in files]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            parsed = list(pool.map(_read_file, files, rels))
    else:
        parsed = [_read_file(p, r) for p, r in zip(files, rels)]

    index = {cls.qualified_name: cls for pf in parsed for cls in pf.classes}
    tests: list[TestCase] = []
    diagnostics: list[Diagnostic] = []
    for pf in parsed:
        diagnostics.extend(pf.diagnostics)
        for cls in pf.classes:
            if not cls.test_methods:
                continue
            context = tuple(extract_methods_under_test(cls, index))
            for name, stmts, loc in cls.test_methods:
                tests.append(TestCase(name, stmts, cls.name, context, loc))
    return tests, diagnostics


def parse_test_classes(source_root: Path | str, **kwargs) -> list[TestCase]:
    tests, diagnostics = parse_project(source_root, **kwargs)
    for diag in diagnostics:
        log.warning("%s:%d: %s", diag.path, diag.line, diag.message)
    return tests


def parse_tests_from_text(source: str, path: str = "<memory>") -> list[TestCase]:
    """Convenience for fixtures: parse a single compilation unit held in memory."""
    pf = parse_source(source.encode("utf-8"), path)
    tests = []
    for cls in pf.classes:
        context = tuple(extract_methods_under_test(cls))
        for name, stmts, loc in cls.test_methods:
            tests.append(TestCase(name, stmts, cls.name, context, loc))
    return tests

