import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from namecheck.abstraction import CodeAlphabet, abstract, parse_skeleton
from namecheck.mining import (
    ClosedPattern,
    EmptyDatabase,
    MinerConfig,
    SupportOutOfRange,
    filter_spanning,
    group_protopatterns,
    is_subsequence,
    mine_closed,
    parse_min_support,
)
from oracles import brute_force_closed

PROTO_FIXTURE = Path(__file__).parent / "fixtures" / "protopatterns.txt"

dbs = st.lists(
    st.lists(st.integers(0, 5), min_size=0, max_size=10),
    min_size=1,
    max_size=8,
)


def as_set(patterns):
    return {(p.codes, p.support) for p in patterns}


@settings(max_examples=150, deadline=None)
@given(dbs, st.sampled_from([1, 2, 3]))
def test_matches_brute_force(db, ms):
    if ms > len(db):
        ms = len(db)
    assert as_set(mine_closed(db, ms)) == brute_force_closed(db, ms)


@settings(max_examples=60, deadline=None)
@given(dbs, st.integers(1, 3))
def test_output_is_closed_and_frequent(db, ms):
    ms = min(ms, len(db))
    out = mine_closed(db, ms)
    for p in out:
        assert p.support >= ms
        assert p.support == sum(is_subsequence(p.codes, s) for s in db)
        for q in out:
            assert not (q.support == p.support and len(q.codes) > len(p.codes) and is_subsequence(p.codes, q.codes))
    assert out == sorted(out)


def test_worked_example():
    db = [(0, 7, 8, 10, 11, 3), (0, 7, 2, 5, 8, 10, 11, 3), (0, 1, 4, 3)]
    out = mine_closed(db, 2)
    assert as_set(out) == {((0, 3), 3), ((0, 7, 8, 10, 11, 3), 2)}


def test_relative_support():
    assert MinerConfig(0.5).resolve(5) == 3
    assert MinerConfig(1.0).resolve(4) == 4
    assert MinerConfig(2).resolve(4) == 2
    assert MinerConfig(3.0).resolve(4) == 3


@pytest.mark.parametrize("ms", [0, 5, 0.0, 1.5, -1, True])
def test_support_out_of_range(ms):
    with pytest.raises(SupportOutOfRange):
        MinerConfig(ms).resolve(4)


def test_empty_database():
    with pytest.raises(EmptyDatabase):
        mine_closed([], 1)


def test_parse_min_support():
    assert parse_min_support("3") == 3
    assert parse_min_support("0.25") == 0.25


def _proto_candidates():
    out = []
    for line in PROTO_FIXTURE.read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        support, skeleton = line.split("\t")
        out.append(ClosedPattern(parse_skeleton(skeleton), int(support)))
    return out


def test_spanning_filter_on_fixture_candidates():
    cands = _proto_candidates()
    kept = filter_spanning(cands)
    assert [p.support for p in kept] == [100]
    assert kept[0].codes == (0, 7, 2, 5, 8, 10, 11, 3)


@settings(max_examples=50, deadline=None)
@given(dbs)
def test_mined_abstractions_are_spanning(db):
    # with Start/End markers on every sequence, every closed pattern spans
    alpha = CodeAlphabet.canonical()
    framed = [(alpha.start, *[c + 4 for c in s], alpha.end) for s in db]
    out = mine_closed(framed, 1)
    assert filter_spanning(out) == out


def test_grouping(sample_tests):
    seqs = [abstract(t).codes for t in sample_tests.values()]
    out = mine_closed(seqs, 1)
    groups = group_protopatterns(out)
    keys = [b.key for b in groups.by_control_flow]
    assert "TryCatch" in keys and "Sequential" in keys
    try_bucket = next(b for b in groups.by_control_flow if b.key == "TryCatch")
    assert all(7 in p.codes for p in try_bucket.patterns)
    assert sum(len(b.patterns) for b in groups.by_prefix) == len(out)


def test_random_databases_fixed_seed():
    rng = random.Random(7)
    for _ in range(20):
        db = [[rng.randrange(6) for _ in range(rng.randrange(11))] for _ in range(rng.randint(1, 8))]
        ms = rng.choice([2, 3]) if len(db) >= 3 else 1
        assert as_set(mine_closed(db, ms)) == brute_force_closed(db, ms)
