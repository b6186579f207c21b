"""Test-name side: identifier splitting, part-of-speech tagging and the name pattern catalog."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Optional, Sequence

from .model import Extraction, Source

NAME_CATALOG = (
    "VerbWithMultipleNouns",
    "DividedDuelVerb",
    "IsAndPastParticiple",
    "TryCatchName",
    "DuelVerb",
    "NounPhrase",
    "SingleEntity",
    "VerbPhraseWithoutPrependedTest",
    "VerbPhraseWithPrependedTest",
    "RegexMatch",
)


class NamePatternId(str, enum.Enum):
    VERB_WITH_MULTIPLE_NOUNS = "VerbWithMultipleNouns"
    DIVIDED_DUEL_VERB = "DividedDuelVerb"
    IS_AND_PAST_PARTICIPLE = "IsAndPastParticiple"
    TRY_CATCH_NAME = "TryCatchName"
    DUEL_VERB = "DuelVerb"
    NOUN_PHRASE = "NounPhrase"
    SINGLE_ENTITY = "SingleEntity"
    VERB_PHRASE_WITHOUT_PREPENDED_TEST = "VerbPhraseWithoutPrependedTest"
    VERB_PHRASE_WITH_PREPENDED_TEST = "VerbPhraseWithPrependedTest"
    REGEX_MATCH = "RegexMatch"


class Tag(str, enum.Enum):
    VERB = "Verb"
    VERB_PAST_PARTICIPLE = "VerbPastParticiple"
    NOUN = "Noun"
    ADJECTIVE = "Adjective"
    PREPOSITION = "Preposition"
    OTHER = "Other"


# --- splitting --------------------------------------------------------------


def _char_class(ch: str) -> str:
    if ch.isdigit():
        return "D"
    if ch.isupper():
        return "U"
    return "L"


def split_identifier(name: str) -> list[str]:
    """Split on underscores/``$``, camelCase humps and letter-digit boundaries.

    Capital runs stay together until a lowercase letter follows, so
    ``SSLProtocol`` splits as ``SSL``, ``Protocol``.
    """
    words: list[str] = []
    for chunk in re.split(r"[_$]+", name):
        if not chunk:
            continue
        current = chunk[0]
        for prev, ch in zip(chunk, chunk[1:]):
            a, b = _char_class(prev), _char_class(ch)
            if (a == "D") != (b == "D"):
                words.append(current)
                current = ch
            elif a == "L" and b == "U":
                words.append(current)
                current = ch
            elif a == "U" and b == "L" and len(current) > 1 and current.isupper():
                words.append(current[:-1])
                current = current[-1] + ch
            else:
                current += ch
        words.append(current)
    return words


# --- tagging -----------------------------------------------------------------

_MODALS = frozenset("should must can will does do did may might could would shall".split())
_BE_HAVE = frozenset("is are was were be been being has have had gets got".split())

_SUFFIX_RULES: tuple[tuple[str, Tag], ...] = (
    ("ing", Tag.NOUN),
    ("tion", Tag.NOUN),
    ("sion", Tag.NOUN),
    ("ment", Tag.NOUN),
    ("ness", Tag.NOUN),
    ("ity", Tag.NOUN),
    ("ance", Tag.NOUN),
    ("ence", Tag.NOUN),
    ("ship", Tag.NOUN),
    ("ism", Tag.NOUN),
    ("er", Tag.NOUN),
    ("or", Tag.NOUN),
    ("ize", Tag.VERB),
    ("ise", Tag.VERB),
    ("ify", Tag.VERB),
    ("ate", Tag.VERB),
    ("able", Tag.ADJECTIVE),
    ("ible", Tag.ADJECTIVE),
    ("ful", Tag.ADJECTIVE),
    ("less", Tag.ADJECTIVE),
    ("ous", Tag.ADJECTIVE),
    ("ive", Tag.ADJECTIVE),
    ("ly", Tag.OTHER),
)


@dataclass(frozen=True)
class WordSequence:
    words: tuple[tuple[str, Tag], ...]
    original: str

    @property
    def texts(self) -> list[str]:
        return [w for w, _ in self.words]

    @property
    def tags(self) -> list[Tag]:
        return [t for _, t in self.words]


def load_lexicon(path: Optional[Path | str] = None) -> dict[str, tuple[Tag, ...]]:
    """Read ``word<TAB>tag`` lines; repeated words list alternative tags, preferred first."""
    if path is None:
        text = resources.files("namecheck.data").joinpath("lexicon.tsv").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    lexicon: dict[str, list[Tag]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word, tag = line.split("\t")
            parsed = Tag(tag.strip())
        except ValueError:
            raise ValueError(f"lexicon line {lineno}: expected 'word<TAB>tag', got {line!r}") from None
        tags = lexicon.setdefault(word.strip().lower(), [])
        if parsed not in tags:
            tags.append(parsed)
    return {w: tuple(t) for w, t in lexicon.items()}


class Tagger:
    """Lexicon plus suffix heuristics, applied to the sentence ``"I " + words``.

    Any callable mapping a word list to tags can stand in for it.
    """

    def __init__(self, lexicon: Optional[dict[str, tuple[Tag, ...]]] = None):
        self.lexicon = lexicon if lexicon is not None else load_lexicon()

    def candidates(self, word: str) -> tuple[Tag, ...]:
        low = word.lower()
        if low.isdigit():
            return (Tag.OTHER,)
        if low in self.lexicon:
            return self.lexicon[low]
        if len(word) > 1 and word.isupper():
            return (Tag.NOUN,)
        for base in _plural_bases(low):
            if base in self.lexicon:
                tags = self.lexicon[base]
                # "returns" keeps the verb reading, "entries" the noun reading
                return tuple(t for t in tags if t in (Tag.VERB, Tag.NOUN)) or (Tag.NOUN,)
        if low.endswith("ed") and len(low) > 4:
            return (Tag.VERB_PAST_PARTICIPLE, Tag.ADJECTIVE)
        for suffix, tag in _SUFFIX_RULES:
            if low.endswith(suffix) and len(low) > len(suffix) + 2:
                return (tag,)
        return (Tag.NOUN,)

    def __call__(self, words: Sequence[str]) -> list[Tag]:
        sentence = ["I", *words]
        tags: list[Tag] = [Tag.NOUN]  # the prepended pronoun
        for i, word in enumerate(sentence[1:], 1):
            cands = self.candidates(word)
            prev_word = sentence[i - 1].lower()
            prev_tag = tags[-1]
            if i == 1 or prev_word in _MODALS:
                pick = _prefer(cands, Tag.VERB)
            elif prev_word in _BE_HAVE:
                pick = _prefer(cands, Tag.VERB_PAST_PARTICIPLE, Tag.ADJECTIVE, Tag.NOUN)
            elif prev_tag in (Tag.VERB, Tag.PREPOSITION, Tag.OTHER, Tag.ADJECTIVE):
                pick = _prefer(cands, Tag.NOUN)
            elif prev_tag is Tag.NOUN and len(cands) > 1:
                # compound nouns stay nouns; a third-person verb form reads as a verb
                pick = Tag.VERB if Tag.VERB in cands and word.lower().endswith("s") else _prefer(cands, Tag.NOUN)
            else:
                pick = cands[0]
            tags.append(pick)
        return tags[1:]


def _prefer(cands: Sequence[Tag], *order: Tag) -> Tag:
    for tag in order:
        if tag in cands:
            return tag
    return cands[0]


def _plural_bases(low: str) -> list[str]:
    bases = []
    if low.endswith("ies") and len(low) > 4:
        bases.append(low[:-3] + "y")
    if low.endswith("es") and len(low) > 3:
        bases.append(low[:-2])
    if low.endswith("s") and not low.endswith("ss") and len(low) > 2:
        bases.append(low[:-1])
    return bases


@lru_cache(maxsize=1)
def default_tagger() -> Tagger:
    return Tagger()


def pos_tag(words: Sequence[str], tagger: Optional[Callable[[Sequence[str]], list[Tag]]] = None) -> WordSequence:
    if not words:
        raise ValueError("pos_tag needs at least one word")
    tagger = tagger or default_tagger()
    tags = tagger(list(words))
    return WordSequence(tuple(zip(words, tags)), "".join(words))


# --- regex sub-patterns ------------------------------------------------------

_COMPONENT_GROUPS = ("action", "predicate", "scenario")


@dataclass(frozen=True)
class RegexSubPattern:
    id: str
    expression: str

    def __post_init__(self) -> None:
        compiled = re.compile(self.expression)
        if not set(compiled.groupindex) & set(_COMPONENT_GROUPS):
            raise ValueError(f"sub-pattern {self.id!r} has no action/predicate/scenario group")

    @property
    def compiled(self) -> re.Pattern:
        return _compile(self.expression)


@lru_cache(maxsize=None)
def _compile(expression: str) -> re.Pattern:
    return re.compile(expression)


def parse_regexes(text: str) -> list[RegexSubPattern]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise ValueError(f"regex line {lineno}: expected 'id<TAB>expression'")
        ident, expression = line.split("\t", 1)
        try:
            out.append(RegexSubPattern(ident.strip(), expression.strip()))
        except re.error as exc:
            raise ValueError(f"regex line {lineno}: {exc}") from None
    return out


def default_regex_text() -> str:
    return resources.files("namecheck.data").joinpath("regexes.tsv").read_text("utf-8")


def load_regexes(path: Optional[Path | str] = None) -> list[RegexSubPattern]:
    text = default_regex_text() if path is None else Path(path).read_text("utf-8")
    return parse_regexes(text)


# --- name patterns -----------------------------------------------------------


@dataclass(frozen=True)
class NameMatch:
    pattern: NamePatternId
    extraction: Extraction
    sub_pattern: Optional[str] = None


_THROWS_DIVIDERS = frozenset({"throws"})
_NOUNISH = (Tag.NOUN,)


def _join(words: Sequence[str]) -> Optional[str]:
    text = "".join(words)
    return text or None


def _name_extraction(**parts: Optional[str]) -> Optional[Extraction]:
    cleaned = {}
    for key, value in parts.items():
        if value is not None:
            value = value.strip("_")
            if not value or value.lower() == "test":
                value = None
        cleaned[key] = value
    return Extraction.build(Source.NAME, **cleaned)


class NameMatcher:
    """Ordered name-pattern catalog; the first structural match wins."""

    def __init__(
        self,
        regexes: Optional[Sequence[RegexSubPattern]] = None,
        tagger: Optional[Callable[[Sequence[str]], list[Tag]]] = None,
    ):
        self.regexes = list(load_regexes() if regexes is None else regexes)
        self.tagger = tagger or default_tagger()

    def match(self, name: str, context: Sequence[str] = ()) -> Optional[NameMatch]:
        words = split_identifier(name)
        if not words:
            return None
        has_test = len(words) > 1 and words[0].lower() == "test"
        rest = words[1:] if has_test else words
        tags = self.tagger(rest) if rest else []
        state = _NameState(name, words, rest, tags, has_test, tuple(context))
        for pid, rule in self._rules():
            hit = rule(state)
            if hit is not None:
                extraction, sub = hit if isinstance(hit, tuple) else (hit, None)
                if extraction is not None:
                    return NameMatch(pid, extraction, sub)
        return None

    def _rules(self):
        return (
            (NamePatternId.VERB_WITH_MULTIPLE_NOUNS, _verb_with_multiple_nouns),
            (NamePatternId.DIVIDED_DUEL_VERB, _divided_duel_verb),
            (NamePatternId.IS_AND_PAST_PARTICIPLE, _is_and_past_participle),
            (NamePatternId.TRY_CATCH_NAME, _try_catch_name),
            (NamePatternId.DUEL_VERB, _duel_verb),
            (NamePatternId.NOUN_PHRASE, _noun_phrase),
            (NamePatternId.SINGLE_ENTITY, _single_entity),
            (NamePatternId.VERB_PHRASE_WITHOUT_PREPENDED_TEST, _verb_phrase_without_test),
            (NamePatternId.VERB_PHRASE_WITH_PREPENDED_TEST, _verb_phrase_with_test),
            (NamePatternId.REGEX_MATCH, self._regex_match),
        )

    def _regex_match(self, s: "_NameState"):
        for sub in self.regexes:
            m = sub.compiled.fullmatch(s.name)
            if m is None:
                continue
            groups = {g: m.groupdict().get(g) for g in _COMPONENT_GROUPS}
            extraction = _name_extraction(**groups)
            if extraction is not None:
                return extraction, sub.id
        return None


@dataclass(frozen=True)
class _NameState:
    name: str
    words: list[str]
    rest: list[str]
    tags: list[Tag]
    has_test: bool
    context: tuple[str, ...]


def _verb_with_multiple_nouns(s: _NameState):
    if s.has_test and len(s.rest) == 4 and s.tags[0] is Tag.VERB and all(t is Tag.NOUN for t in s.tags[1:]):
        return _name_extraction(action=s.rest[0], scenario=_join(s.rest[1:]))
    return None


def _divided_duel_verb(s: _NameState):
    if (
        s.has_test
        and len(s.rest) == 4
        and s.tags == [Tag.VERB, Tag.NOUN, Tag.VERB, Tag.NOUN]
        and s.rest[1].lower() == s.rest[3].lower()
    ):
        return _name_extraction(action=s.rest[0], predicate=s.rest[2], scenario=s.rest[1])
    return None


def _is_and_past_participle(s: _NameState):
    if len(s.rest) == 2 and s.tags == [Tag.VERB, Tag.VERB_PAST_PARTICIPLE]:
        return _name_extraction(action=s.rest[0], predicate=s.rest[1])
    return None


def _try_catch_name(s: _NameState):
    lowered = [w.lower() for w in s.rest]
    for i, word in enumerate(lowered):
        if word in _THROWS_DIVIDERS and 0 < i < len(lowered) - 1:
            before = s.rest[:i]
            if all(w.lower() in _MODALS for w in before):
                return None
            return _name_extraction(action=_join(before), predicate=_join(s.rest[i + 1 :]))
    return None


def _duel_verb(s: _NameState):
    if len(s.rest) == 3 and s.tags == [Tag.VERB, Tag.VERB, Tag.NOUN]:
        return _name_extraction(action=s.rest[0], predicate=s.rest[1], scenario=s.rest[2])
    return None


def _noun_phrase(s: _NameState):
    if len(s.rest) == 1 and s.tags[0] is Tag.NOUN:
        return _name_extraction(scenario=s.rest[0])
    return None


def _single_entity(s: _NameState):
    if not s.has_test or not s.context:
        return None
    remainder = _join(s.rest)
    if remainder and remainder.lower() in {m.lower() for m in s.context}:
        return _name_extraction(action=remainder)
    return None


def _verb_phrase(rest: list[str], tags: list[Tag]):
    if len(rest) < 2 or tags[0] is not Tag.VERB or tags[1] not in _NOUNISH:
        return None
    predicate = rest[2] if len(rest) > 2 and tags[2] is Tag.VERB else None
    return _name_extraction(action=rest[0], predicate=predicate, scenario=rest[1])


def _verb_phrase_without_test(s: _NameState):
    return None if s.has_test else _verb_phrase(s.rest, s.tags)


def _verb_phrase_with_test(s: _NameState):
    return _verb_phrase(s.rest, s.tags) if s.has_test else None


_default_matcher: Optional[NameMatcher] = None


def match_name(
    name: str,
    context: Sequence[str] = (),
    regexes: Optional[Sequence[RegexSubPattern]] = None,
) -> Optional[NameMatch]:
    """Match ``name`` against the catalog with the given method-under-test context."""
    global _default_matcher
    if regexes is not None:
        return NameMatcher(regexes).match(name, context)
    if _default_matcher is None:
        _default_matcher = NameMatcher()
    return _default_matcher.match(name, context)
