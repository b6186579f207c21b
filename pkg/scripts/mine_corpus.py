"""Abstract every test under a source root, mine closed patterns, and group the spanning ones.

    python3 scripts/mine_corpus.py tests/fixtures/samples --min-support 2
"""

import argparse

from namecheck.abstraction import CodeAlphabet, abstract, reconstruct
from namecheck.mining import filter_spanning, group_protopatterns, mine_closed, parse_min_support
from namecheck.source import parse_project


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("root")
    ap.add_argument("--min-support", default="0.05")
    ap.add_argument("--top", type=int, default=20, help="patterns to print, by support")
    args = ap.parse_args()

    alphabet = CodeAlphabet.canonical()
    tests, _ = parse_project(args.root)
    seqs = [abstract(t, alphabet).codes for t in tests]
    closed = mine_closed(seqs, parse_min_support(args.min_support))
    spanning = filter_spanning(closed, alphabet)
    print(f"{len(tests)} tests, {len(closed)} closed patterns, {len(spanning)} spanning")
    for p in sorted(spanning, key=lambda p: (-p.support, p.codes))[: args.top]:
        print(f"{p.support:6d}  {reconstruct(p.codes, alphabet)}")
    groups = group_protopatterns(spanning, alphabet)
    print()
    for bucket in groups.by_control_flow:
        print(f"{bucket.key:<12} {len(bucket.patterns):5d} patterns  total support {bucket.total_support}")


if __name__ == "__main__":
    main()
