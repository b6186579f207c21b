"""Statement-code abstraction of test bodies and the sequence-database text format."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, TextIO

from .model import Statement, StatementKind, TestCase

ALPHABET_VERSION = "1"

# Codes 0, 1, 2, 3, 7, 8, 10, 11 agree with the numbering visible in the mined
# try/catch example (start, declaration, method call, end, try{, catch{, }catch, }try).
CANONICAL_ENTRIES: dict[str, int] = {
    "Start": 0,
    "Declaration": 1,
    "MethodInvocation": 2,
    "End": 3,
    "Assertion": 4,
    "Fail": 5,
    "Return": 6,
    "TryOpen": 7,
    "CatchOpen": 8,
    "NewObject": 9,
    "CatchClose": 10,
    "TryClose": 11,
    "IfOpen": 12,
    "IfClose": 13,
    "ElseOpen": 14,
    "ElseClose": 15,
    "LoopOpen": 16,
    "LoopClose": 17,
    "FinallyOpen": 18,
    "FinallyClose": 19,
    "Other": 20,
}

_SKELETON_TOKENS = {
    "Start": "start{",
    "End": "}end",
    "TryOpen": "try{",
    "TryClose": "}try",
    "CatchOpen": "catch{",
    "CatchClose": "}catch",
    "FinallyOpen": "finally{",
    "FinallyClose": "}finally",
    "IfOpen": "if{",
    "IfClose": "}if",
    "ElseOpen": "else{",
    "ElseClose": "}else",
    "LoopOpen": "loop{",
    "LoopClose": "}loop",
    "Declaration": "declaration",
    "MethodInvocation": "methodCall",
    "Assertion": "assertion",
    "Fail": "fail",
    "Return": "return",
    "NewObject": "newObject",
    "Other": "other",
}

# block label -> (open entry, close entry)
_BLOCK_MARKERS = {
    "try": ("TryOpen", "TryClose"),
    "catch": ("CatchOpen", "CatchClose"),
    "finally": ("FinallyOpen", "FinallyClose"),
    "then": ("IfOpen", "IfClose"),
    "else": ("ElseOpen", "ElseClose"),
    "body": ("LoopOpen", "LoopClose"),
}


class UnknownKind(KeyError):
    """A statement kind or marker has no code in the alphabet."""


class UnknownCode(KeyError):
    """A code is not part of the alphabet."""


@dataclass(frozen=True)
class CodeAlphabet:
    entries: Mapping[str, int]
    version: str = ALPHABET_VERSION

    def __post_init__(self) -> None:
        codes = list(self.entries.values())
        if len(set(codes)) != len(codes):
            raise ValueError("alphabet codes must be distinct")
        if any(c < 0 for c in codes):
            raise ValueError("alphabet codes must be non-negative")
        for marker in ("Start", "End"):
            if marker not in self.entries:
                raise ValueError(f"alphabet lacks the {marker} marker")

    @classmethod
    def canonical(cls) -> "CodeAlphabet":
        return cls(dict(CANONICAL_ENTRIES))

    @property
    def start(self) -> int:
        return self.entries["Start"]

    @property
    def end(self) -> int:
        return self.entries["End"]

    def encode(self, entry: str) -> int:
        try:
            return self.entries[entry]
        except KeyError:
            raise UnknownKind(entry) from None

    def decode(self, code: int) -> str:
        for name, value in self.entries.items():
            if value == code:
                return name
        raise UnknownCode(code)

    def codes_for(self, names: Iterable[str]) -> set[int]:
        return {self.entries[n] for n in names if n in self.entries}

    def header(self) -> str:
        pairs = " ".join(f"{code}={name}" for name, code in sorted(self.entries.items(), key=lambda kv: kv[1]))
        return f"#alphabet v{self.version} {pairs}"

    @classmethod
    def from_header(cls, line: str) -> "CodeAlphabet":
        parts = line.strip().split()
        if not parts or parts[0] != "#alphabet":
            raise ValueError(f"not an alphabet header: {line!r}")
        version = ALPHABET_VERSION
        entries = {}
        for part in parts[1:]:
            if part.startswith("v") and "=" not in part:
                version = part[1:]
                continue
            code, _, name = part.partition("=")
            entries[name] = int(code)
        return cls(entries, version)


@dataclass(frozen=True)
class AbstractedSequence:
    codes: tuple[int, ...]
    origin: Optional[str] = None  # test id


def abstract(test: TestCase, alphabet: Optional[CodeAlphabet] = None) -> AbstractedSequence:
    """One code per simple statement; compound statements contribute bracket codes per block.

    Catch and finally blocks nest inside the try brackets, else-blocks follow
    the then-block brackets.
    """
    alphabet = alphabet or CodeAlphabet.canonical()
    out = [alphabet.start]
    for stmt in test.statements:
        _emit_one(stmt, alphabet, out)
    out.append(alphabet.end)
    return AbstractedSequence(tuple(out), test.test_id)


def _emit_one(stmt: Statement, alphabet: CodeAlphabet, out: list[int]) -> None:
    if stmt.kind is StatementKind.TRY_CATCH:
        _emit_try(stmt, alphabet, out)
    elif stmt.kind.compound:
        for block in stmt.blocks:
            opener, closer = _BLOCK_MARKERS[block.label]
            out.append(alphabet.encode(opener))
            for child in block.statements:
                _emit_one(child, alphabet, out)
            out.append(alphabet.encode(closer))
    else:
        out.append(alphabet.encode(stmt.kind.value))


def _emit_try(stmt: Statement, alphabet: CodeAlphabet, out: list[int]) -> None:
    out.append(alphabet.encode("TryOpen"))
    for block in stmt.blocks:
        if block.label == "try":
            for child in block.statements:
                _emit_one(child, alphabet, out)
            continue
        opener, closer = _BLOCK_MARKERS[block.label]
        out.append(alphabet.encode(opener))
        for child in block.statements:
            _emit_one(child, alphabet, out)
        out.append(alphabet.encode(closer))
    out.append(alphabet.encode("TryClose"))


def reconstruct(codes: Sequence[int], alphabet: Optional[CodeAlphabet] = None) -> str:
    """Readable skeleton of a code sequence; ``*`` marks the gaps a mined pattern allows."""
    alphabet = alphabet or CodeAlphabet.canonical()
    tokens = [_SKELETON_TOKENS.get(name, name) for name in (alphabet.decode(c) for c in codes)]
    return " * ".join(tokens)


def parse_skeleton(text: str, alphabet: Optional[CodeAlphabet] = None) -> tuple[int, ...]:
    """Inverse of :func:`reconstruct`."""
    alphabet = alphabet or CodeAlphabet.canonical()
    by_token = {tok: name for name, tok in _SKELETON_TOKENS.items()}
    codes = []
    for tok in text.split():
        if tok == "*":
            continue
        name = by_token.get(tok, tok)
        codes.append(alphabet.encode(name))
    return tuple(codes)


def write_sequence_db(
    sequences: Iterable[Sequence[int]], alphabet: CodeAlphabet, fh: TextIO
) -> None:
    fh.write(alphabet.header() + "\n")
    for seq in sequences:
        fh.write(" ".join(str(c) for c in seq) + "\n")


def read_sequence_db(fh: TextIO) -> tuple[list[tuple[int, ...]], CodeAlphabet]:
    """Read the seqdb text format.

    SPMF-style lines using ``-1`` item separators and a ``-2`` terminator are
    accepted too. Without a header the canonical alphabet is assumed.
    """
    alphabet = None
    sequences = []
    for raw in fh:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#alphabet"):
            alphabet = CodeAlphabet.from_header(line)
            continue
        if line.startswith("#"):
            continue
        codes = tuple(int(tok) for tok in line.split() if tok not in ("-1", "-2"))
        sequences.append(codes)
    alphabet = alphabet or CodeAlphabet.canonical()
    known = set(alphabet.entries.values())
    for seq in sequences:
        for code in seq:
            if code not in known:
                raise UnknownCode(code)
    return sequences, alphabet
