"""Closed sequential pattern mining over statement-code sequences.

Sequences are single-item-per-position (one statement code each) and support
counts distinct sequences. The search is a depth-first vertical-database
enumeration: every pattern keeps, per sequence id, the end position of its
earliest embedding, which is all that is needed to extend it. Two devices from
ClaSP keep the search small:

* subtree pruning: when a new pattern is a subsequence of an already expanded
  pattern with an identical projection (same sequences, same earliest end
  positions), every extension of it is dominated by the matching extension of
  the larger pattern, so its subtree holds no closed pattern;
* a final closure pass drops candidates that have a strict super-sequence of
  equal support among the candidates.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .abstraction import CodeAlphabet

Projection = tuple[tuple[int, int], ...]  # ((sid, end_pos), ...) sorted by sid


class EmptyDatabase(ValueError):
    pass


class SupportOutOfRange(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ClosedPattern:
    codes: tuple[int, ...]
    support: int


@dataclass(frozen=True)
class MinerConfig:
    min_support: Union[int, float]

    def resolve(self, n_sequences: int) -> int:
        ms = self.min_support
        if isinstance(ms, bool) or not isinstance(ms, (int, float)):
            raise SupportOutOfRange(f"invalid min_support {ms!r}")
        if isinstance(ms, float) and not (ms.is_integer() and ms > 1):
            if not 0.0 < ms <= 1.0:
                raise SupportOutOfRange(f"relative min_support must be in (0, 1], got {ms}")
            absolute = max(1, math.ceil(ms * n_sequences - 1e-9))
        else:
            absolute = int(ms)
        if absolute < 1 or absolute > n_sequences:
            raise SupportOutOfRange(
                f"min_support {ms} resolves to {absolute}, outside [1, {n_sequences}]"
            )
        return absolute


def parse_min_support(text: str) -> Union[int, float]:
    """``"3"`` -> 3 (absolute), ``"0.2"`` -> 0.2 (relative)."""
    if any(ch in text for ch in ".eE"):
        return float(text)
    return int(text)


def is_subsequence(pattern: Sequence[int], sequence: Sequence[int]) -> bool:
    it = iter(sequence)
    return all(any(x == y for y in it) for x in pattern)


@dataclass
class _Miner:
    sequences: list[tuple[int, ...]]
    min_support: int
    # next_pos[sid][i][item] -> first index >= i holding item
    next_pos: list[list[dict[int, int]]] = field(default_factory=list)
    expanded: dict[Projection, list[tuple[int, ...]]] = field(default_factory=lambda: defaultdict(list))
    candidates: dict[tuple[int, ...], tuple[int, frozenset[int]]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for seq in self.sequences:
            table: list[dict[int, int]] = [dict() for _ in range(len(seq) + 1)]
            for i in range(len(seq) - 1, -1, -1):
                table[i] = dict(table[i + 1])
                table[i][seq[i]] = i
            self.next_pos.append(table)

    def extend(self, projection: Projection) -> dict[int, Projection]:
        grown: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for sid, end in projection:
            for item, pos in self.next_pos[sid][end + 1].items():
                grown[item].append((sid, pos))
        return {
            item: tuple(sorted(proj))
            for item, proj in grown.items()
            if len(proj) >= self.min_support
        }

    def dominated(self, pattern: tuple[int, ...], projection: Projection) -> bool:
        return any(
            len(other) > len(pattern) and is_subsequence(pattern, other)
            for other in self.expanded.get(projection, ())
        )

    def run(self) -> None:
        roots: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for sid, table in enumerate(self.next_pos):
            for item, pos in table[0].items():
                roots[item].append((sid, pos))
        stack = [
            ((item,), tuple(sorted(proj)))
            for item, proj in sorted(roots.items(), reverse=True)
            if len(proj) >= self.min_support
        ]
        while stack:
            pattern, projection = stack.pop()
            self.candidates[pattern] = (len(projection), frozenset(sid for sid, _ in projection))
            if self.dominated(pattern, projection):
                continue
            self.expanded[projection].append(pattern)
            children = self.extend(projection)
            for item in sorted(children, reverse=True):
                stack.append((pattern + (item,), children[item]))

    def closed(self) -> list[ClosedPattern]:
        by_sids: dict[frozenset[int], list[tuple[int, ...]]] = defaultdict(list)
        for pattern, (_, sids) in self.candidates.items():
            by_sids[sids].append(pattern)
        out = []
        for sids, group in by_sids.items():
            group.sort(key=len, reverse=True)
            kept: list[tuple[int, ...]] = []
            for pattern in group:
                # an equal-support super-sequence necessarily occurs in the same sequences
                if not any(len(k) > len(pattern) and is_subsequence(pattern, k) for k in kept):
                    kept.append(pattern)
            out.extend(ClosedPattern(p, len(sids)) for p in kept)
        out.sort()
        return out


def mine_closed(
    sequences: Iterable[Sequence[int]], cfg: MinerConfig | int | float
) -> list[ClosedPattern]:
    """All frequent closed sequential patterns, sorted lexicographically by codes."""
    db = [tuple(s) for s in sequences]
    if not db:
        raise EmptyDatabase("cannot mine an empty sequence database")
    if not isinstance(cfg, MinerConfig):
        cfg = MinerConfig(cfg)
    miner = _Miner(db, cfg.resolve(len(db)))
    miner.run()
    return miner.closed()


def filter_spanning(
    patterns: Iterable[ClosedPattern], alphabet: Optional[CodeAlphabet] = None
) -> list[ClosedPattern]:
    """Keep patterns that start with the Start marker and end with the End marker."""
    alphabet = alphabet or CodeAlphabet.canonical()
    return [
        p
        for p in patterns
        if len(p.codes) >= 2 and p.codes[0] == alphabet.start and p.codes[-1] == alphabet.end
    ]


CONTROL_FLOW_GROUPS = {
    "TryCatch": ("TryOpen", "CatchOpen", "FinallyOpen"),
    "IfElse": ("IfOpen", "ElseOpen"),
    "Loop": ("LoopOpen",),
}


@dataclass(frozen=True)
class Bucket:
    key: str
    patterns: tuple[ClosedPattern, ...]

    @property
    def total_support(self) -> int:
        return sum(p.support for p in self.patterns)


@dataclass(frozen=True)
class GroupReport:
    by_control_flow: tuple[Bucket, ...]
    by_prefix: tuple[Bucket, ...]


def group_protopatterns(
    patterns: Iterable[ClosedPattern],
    alphabet: Optional[CodeAlphabet] = None,
    prefix_length: int = 3,
) -> GroupReport:
    """Bucket patterns by the control-flow brackets they contain and by shared prefixes.

    A pattern lands in every control-flow bucket whose opening code it holds;
    patterns without control flow go to ``Sequential``. Prefix buckets key on
    the first ``prefix_length`` codes.
    """
    alphabet = alphabet or CodeAlphabet.canonical()
    pats = sorted(patterns)
    flow: dict[str, list[ClosedPattern]] = {}
    for name, openers in CONTROL_FLOW_GROUPS.items():
        codes = alphabet.codes_for(openers)
        members = [p for p in pats if codes & set(p.codes)]
        if members:
            flow[name] = members
    all_flow = alphabet.codes_for(o for group in CONTROL_FLOW_GROUPS.values() for o in group)
    sequential = [p for p in pats if not all_flow & set(p.codes)]
    if sequential:
        flow["Sequential"] = sequential

    prefixes: dict[tuple[int, ...], list[ClosedPattern]] = defaultdict(list)
    for p in pats:
        prefixes[p.codes[:prefix_length]].append(p)
    prefix_buckets = tuple(
        Bucket(" ".join(str(c) for c in key), tuple(members))
        for key, members in sorted(prefixes.items())
    )
    return GroupReport(
        tuple(Bucket(k, tuple(v)) for k, v in flow.items()),
        prefix_buckets,
    )
