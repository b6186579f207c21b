"""Print name/body pattern match-rate tables and outcome counts for a source root.

    python3 scripts/match_rates.py out/corpus
"""

import argparse
import time

from namecheck.report import analyze_project, render_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("root")
    args = ap.parse_args()
    t0 = time.perf_counter()
    report = analyze_project(args.root)
    elapsed = time.perf_counter() - t0
    text = render_report(report, "text", only=("__none__",), stats=True).decode()
    print(text)
    n = len(report.tests)
    print(f"analyzed {n} tests in {elapsed:.2f}s ({1000 * elapsed / max(n, 1):.2f} ms/test)")


if __name__ == "__main__":
    main()
