"""Name-vs-body comparison, classification and suggestions."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .model import COMPONENTS, Component, Extraction, Source

MIN_FRAGMENT = 2


class Outcome(str, enum.Enum):
    DESCRIPTIVE = "descriptive"
    NON_DESCRIPTIVE = "non-descriptive"
    UNKNOWN = "unknown"


class ComponentResult(str, enum.Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    NAME_ONLY = "NameOnly"
    BODY_ONLY = "BodyOnly"
    BOTH_ABSENT = "BothAbsent"


class SuggestionKind(str, enum.Enum):
    ADD = "Add"
    REMOVE = "Remove"
    REPLACE = "Replace"


@dataclass(frozen=True)
class Suggestion:
    kind: SuggestionKind
    component: Component
    name_value: Optional[str] = None
    body_value: Optional[str] = None

    def __post_init__(self) -> None:
        want = {
            SuggestionKind.ADD: (False, True),
            SuggestionKind.REMOVE: (True, False),
            SuggestionKind.REPLACE: (True, True),
        }[self.kind]
        if (self.name_value is not None, self.body_value is not None) != want:
            raise ValueError(f"{self.kind.value} suggestion has the wrong values")

    def describe(self) -> str:
        comp = self.component.value
        if self.kind is SuggestionKind.ADD:
            return f"add {comp} '{self.body_value}'"
        if self.kind is SuggestionKind.REMOVE:
            return f"remove {comp} '{self.name_value}'"
        return f"replace {comp} '{self.name_value}' with '{self.body_value}'"


@dataclass(frozen=True)
class Classification:
    outcome: Outcome
    component_results: dict[Component, ComponentResult] = field(default_factory=dict)

    @property
    def name_only_without_mismatch(self) -> bool:
        """Non-descriptive solely because the name carries slots the body pattern did not extract."""
        results = set(self.component_results.values())
        return ComponentResult.NAME_ONLY in results and ComponentResult.MISMATCH not in results


_PARENS = re.compile(r"\([^()]*\)")
_TEST_PREFIX = re.compile(r"^test(?=[A-Z_0-9])")


def normalize(fragment: Union[str, Sequence[str]], name_side: bool = False) -> str:
    """Canonical comparison text: no call parentheses or receiver, no separators, lower case."""
    text = fragment if isinstance(fragment, str) else "".join(fragment)
    text = text.strip()
    prev = None
    while prev != text:
        prev, text = text, _PARENS.sub("", text)
    text = text.rsplit(".", 1)[-1]
    if name_side:
        stripped = _TEST_PREFIX.sub("", text).lstrip("_")
        if len(stripped) >= MIN_FRAGMENT:
            text = stripped
    return text.replace("_", "").replace(" ", "").lower()


def pieces_match(a: str, b: str) -> bool:
    if a == b:
        return True
    short, long = (a, b) if len(a) < len(b) else (b, a)
    return len(short) >= MIN_FRAGMENT and short in long


def _present(ext: Optional[Extraction]) -> bool:
    return ext is not None and not ext.is_empty


def classify(name_ext: Optional[Extraction], body_ext: Optional[Extraction]) -> Classification:
    if not _present(name_ext) or not _present(body_ext):
        return Classification(Outcome.UNKNOWN)
    results = {}
    for comp in COMPONENTS:
        n, b = name_ext.get(comp), body_ext.get(comp)
        if n is not None and b is not None:
            ok = pieces_match(normalize(n, name_side=True), normalize(b))
            results[comp] = ComponentResult.MATCH if ok else ComponentResult.MISMATCH
        elif n is not None:
            results[comp] = ComponentResult.NAME_ONLY
        elif b is not None:
            results[comp] = ComponentResult.BODY_ONLY
        else:
            results[comp] = ComponentResult.BOTH_ABSENT
    bad = {ComponentResult.MISMATCH, ComponentResult.NAME_ONLY}
    outcome = Outcome.NON_DESCRIPTIVE if bad & set(results.values()) else Outcome.DESCRIPTIVE
    return Classification(outcome, results)


def suggest(
    classification: Classification,
    name_ext: Optional[Extraction],
    body_ext: Optional[Extraction],
) -> list[Suggestion]:
    if classification.outcome is Outcome.UNKNOWN:
        return []
    res = classification.component_results
    out = [
        Suggestion(SuggestionKind.ADD, c, body_value=body_ext.get(c))
        for c in COMPONENTS
        if res[c] is ComponentResult.BODY_ONLY
    ]
    if classification.outcome is Outcome.NON_DESCRIPTIVE:
        out += [
            Suggestion(SuggestionKind.REMOVE, c, name_value=name_ext.get(c))
            for c in COMPONENTS
            if res[c] is ComponentResult.NAME_ONLY
        ]
        out += [
            Suggestion(SuggestionKind.REPLACE, c, name_ext.get(c), body_ext.get(c))
            for c in COMPONENTS
            if res[c] is ComponentResult.MISMATCH
        ]
    return out


def apply_suggestions(name_ext: Extraction, suggestions: Sequence[Suggestion]) -> Optional[Extraction]:
    """Rewrite a name triple as the suggestions say; used to check they lead to a descriptive name."""
    values = {c.value: name_ext.get(c) for c in COMPONENTS}
    for s in suggestions:
        if s.kind is SuggestionKind.REMOVE:
            values[s.component.value] = None
        else:
            values[s.component.value] = s.body_value
    return Extraction.build(Source.NAME, **values)
