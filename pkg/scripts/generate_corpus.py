"""Write a synthetic JUnit corpus.

    python3 scripts/generate_corpus.py out/corpus --tests 1000 --seed 0
"""

import argparse

from namecheck.synthetic import CorpusConfig, write_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("root")
    ap.add_argument("--tests", type=int, default=1000)
    ap.add_argument("--per-class", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mislabel-rate", type=float, default=0.3)
    args = ap.parse_args()
    cfg = CorpusConfig(args.tests, args.per_class, args.seed, args.mislabel_rate)
    paths = write_corpus(args.root, cfg)
    print(f"wrote {args.tests} tests in {len(paths)} classes under {args.root}")


if __name__ == "__main__":
    main()
