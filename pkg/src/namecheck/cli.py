"""Command-line entry point.

Exit codes: 0 clean run, 1 at least one non-descriptive name, 2 usage or
config error, 3 I/O or fatal parse error.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import CATALOG_VERSION, SCHEMA_VERSION, __version__
from .abstraction import CodeAlphabet, UnknownCode, abstract, read_sequence_db, reconstruct, write_sequence_db
from .config import OUTCOME_NAMES, AnalyzeConfig, ConfigError, load_config
from .mining import (
    EmptyDatabase,
    MinerConfig,
    SupportOutOfRange,
    filter_spanning,
    group_protopatterns,
    mine_closed,
    parse_min_support,
)
from .report import analyze_project, render_report
from .source import SourceIOError, parse_project

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("namecheck")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the message terse
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="namecheck", description="Check whether JUnit test names describe their bodies.")
    parser.add_argument(
        "--version",
        action="version",
        version=f"namecheck {__version__} (catalog {CATALOG_VERSION}, schema {SCHEMA_VERSION})",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    an = sub.add_parser("analyze", help="classify every test name under a source root")
    an.add_argument("root", type=Path)
    an.add_argument("--format", choices=("text", "records"), default="text")
    an.add_argument("--regexes", help="regex sub-pattern file (id<TAB>expression)")
    an.add_argument("--lexicon", help="tagger lexicon file (word<TAB>tag)")
    an.add_argument("--only", action="append", choices=OUTCOME_NAMES, help="show only these outcomes")
    an.add_argument("--stats", action="store_true", help="append pattern match-rate tables")
    an.add_argument("--config", type=Path, help="JSON config file")
    an.add_argument("--jobs", type=int, help="parallel file parsing")
    an.add_argument("-o", "--output", type=Path, help="write the report here instead of stdout")

    mi = sub.add_parser("mine", help="mine closed statement-code patterns from a sequence database")
    mi.add_argument("--input", required=True, type=Path)
    mi.add_argument("--min-support", required=True, help="absolute count (3) or fraction (0.2)")
    mi.add_argument("--spanning-only", action="store_true", help="keep Start...End patterns only")
    mi.add_argument("--group", action="store_true", help="group by control flow and prefix")
    mi.add_argument("--format", choices=("text", "records"), default="text")

    ab = sub.add_parser("abstract", help="write the statement-code sequence database of a source root")
    ab.add_argument("root", type=Path)
    ab.add_argument("-o", "--output", type=Path, help="defaults to stdout")
    return parser


def _write(data: bytes, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        output.write_bytes(data)


def _cmd_analyze(args) -> int:
    config = load_config(args.config) if args.config else AnalyzeConfig()
    config = config.merged(
        regexes=args.regexes,
        lexicon=args.lexicon,
        only=tuple(args.only) if args.only else None,
        jobs=args.jobs,
    )
    for path in (config.regexes, config.lexicon):
        if path and not Path(path).is_file():
            raise ConfigError(f"no such file: {path}")
    try:
        report = analyze_project(args.root, config)
    except (ValueError, re.error) as exc:
        # malformed regex or lexicon files
        raise ConfigError(str(exc)) from None
    _write(render_report(report, args.format, config.only, args.stats), args.output)
    return EXIT_FINDINGS if report.has_non_descriptive else EXIT_OK


def _cmd_mine(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        sequences, alphabet = read_sequence_db(fh)
    try:
        patterns = mine_closed(sequences, MinerConfig(parse_min_support(args.min_support)))
    except (EmptyDatabase, SupportOutOfRange) as exc:
        raise ConfigError(str(exc)) from None
    if args.spanning_only:
        patterns = filter_spanning(patterns, alphabet)
    out = []
    if args.format == "records":
        for p in patterns:
            rec = {"record": "pattern", "codes": list(p.codes), "support": p.support, "skeleton": reconstruct(p.codes, alphabet)}
            out.append(json.dumps(rec, sort_keys=True))
        if args.group:
            groups = group_protopatterns(patterns, alphabet)
            for kind, buckets in (("control_flow", groups.by_control_flow), ("prefix", groups.by_prefix)):
                for b in buckets:
                    rec = {
                        "record": "group",
                        "by": kind,
                        "key": b.key,
                        "patterns": [list(p.codes) for p in b.patterns],
                        "total_support": b.total_support,
                    }
                    out.append(json.dumps(rec, sort_keys=True))
    else:
        out.append(f"{len(patterns)} closed patterns from {len(sequences)} sequences")
        for p in patterns:
            out.append(f"{p.support:6d}  {' '.join(map(str, p.codes))}  |  {reconstruct(p.codes, alphabet)}")
        if args.group:
            groups = group_protopatterns(patterns, alphabet)
            out.append("")
            out.append("by control flow:")
            out += [f"  {b.key}: {len(b.patterns)} patterns, support {b.total_support}" for b in groups.by_control_flow]
            out.append("by prefix:")
            out += [f"  {b.key}: {len(b.patterns)} patterns, support {b.total_support}" for b in groups.by_prefix]
    _write(("\n".join(out) + "\n").encode("utf-8"), None)
    return EXIT_OK


def _cmd_abstract(args) -> int:
    tests, diagnostics = parse_project(args.root)
    for d in diagnostics:
        log.warning("%s:%d: %s", d.path, d.line, d.message)
    alphabet = CodeAlphabet.canonical()
    buf = io.StringIO()
    write_sequence_db((abstract(t, alphabet).codes for t in tests), alphabet, buf)
    _write(buf.getvalue().encode("utf-8"), args.output)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    handler = {"analyze": _cmd_analyze, "mine": _cmd_mine, "abstract": _cmd_abstract}[args.command]
    try:
        return handler(args)
    except (ConfigError, UnknownCode, ValueError) as exc:
        print(f"namecheck: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SourceIOError, OSError) as exc:
        print(f"namecheck: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
