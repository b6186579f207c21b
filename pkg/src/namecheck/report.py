"""Project analysis driver, match-rate statistics and report rendering."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import CATALOG_VERSION, SCHEMA_VERSION, __version__
from .body_patterns import FAMILIES, BodyMatch, BodyPatternId, CATALOG, match_body
from .compare import (
    Classification,
    ComponentResult,
    Outcome,
    Suggestion,
    SuggestionKind,
    classify,
    suggest,
)
from .config import AnalyzeConfig
from .model import COMPONENTS, Component, Extraction, Source, TestCase
from .naming import NameMatch, NameMatcher, NamePatternId, Tagger, default_regex_text, load_lexicon, parse_regexes
from .source import Diagnostic, parse_project

FORMATS = ("text", "records")


class UnknownFormat(ValueError):
    pass


@dataclass(frozen=True)
class TestReport:
    class_name: str
    name: str
    path: str
    start_line: int
    end_line: int
    name_match: Optional[NameMatch]
    body_match: Optional[BodyMatch]
    classification: Classification
    suggestions: tuple[Suggestion, ...]
    notes: tuple[str, ...] = ()

    @property
    def test_id(self) -> str:
        return f"{self.class_name}.{self.name}"

    @property
    def outcome(self) -> Outcome:
        return self.classification.outcome


TestReport.__test__ = False  # type: ignore[attr-defined]


@dataclass(frozen=True)
class StatRow:
    label: str
    count: int
    percent: float


@dataclass(frozen=True)
class MatchStats:
    total: int
    name_rows: tuple[StatRow, ...]
    body_rows: tuple[StatRow, ...]
    body_family_rows: tuple[StatRow, ...]
    name_overall: StatRow
    body_overall: StatRow


@dataclass(frozen=True)
class ProjectReport:
    tests: tuple[TestReport, ...]
    diagnostics: tuple[Diagnostic, ...] = ()
    tool_version: str = __version__
    catalog_version: str = CATALOG_VERSION
    schema_version: str = SCHEMA_VERSION
    regex_digest: str = ""
    counts: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.counts:
            tally = Counter(t.outcome.value for t in self.tests)
            object.__setattr__(self, "counts", {o.value: tally.get(o.value, 0) for o in Outcome})

    @property
    def stats(self) -> MatchStats:
        return compute_match_stats(self.tests)

    @property
    def has_non_descriptive(self) -> bool:
        return self.counts.get(Outcome.NON_DESCRIPTIVE.value, 0) > 0


def _pct(count: int, total: int) -> float:
    return round(100.0 * count / total, 2) if total else 0.0


def compute_match_stats(reports: Sequence[TestReport]) -> MatchStats:
    """Per-pattern match counts with percentages over all tests, plus an overall row."""
    total = len(reports)
    names = Counter(r.name_match.pattern for r in reports if r.name_match)
    bodies = Counter(r.body_match.pattern for r in reports if r.body_match)
    name_rows = tuple(StatRow(p.value, names[p], _pct(names[p], total)) for p in NamePatternId)
    body_rows = tuple(StatRow(p.value, bodies[p], _pct(bodies[p], total)) for p, _ in CATALOG)
    family_rows = []
    for family, members in FAMILIES.items():
        n = sum(bodies[m] for m in members)
        family_rows.append(StatRow(family, n, _pct(n, total)))
    n_name, n_body = sum(names.values()), sum(bodies.values())
    return MatchStats(
        total,
        name_rows,
        body_rows,
        tuple(family_rows),
        StatRow("Overall", n_name, _pct(n_name, total)),
        StatRow("Overall", n_body, _pct(n_body, total)),
    )


def regex_digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def report_test(test: TestCase, matcher: NameMatcher) -> TestReport:
    name_match = matcher.match(test.name, test.methods_under_test)
    body_match = match_body(test)
    name_ext = name_match.extraction if name_match else None
    body_ext = body_match.extraction if body_match else None
    classification = classify(name_ext, body_ext)
    notes = []
    if name_match is not None and name_match.pattern is NamePatternId.SINGLE_ENTITY:
        notes.append("name matched a heuristic method-under-test candidate")
    if classification.outcome is Outcome.NON_DESCRIPTIVE and classification.name_only_without_mismatch:
        notes.append("name carries components the body pattern does not extract")
    if body_match is not None:
        notes.extend(body_match.notes)
    return TestReport(
        test.class_name,
        test.name,
        test.location.path,
        test.location.start_line,
        test.location.end_line,
        name_match,
        body_match,
        classification,
        tuple(suggest(classification, name_ext, body_ext)),
        tuple(notes),
    )


def analyze_tests(
    tests: Iterable[TestCase],
    matcher: Optional[NameMatcher] = None,
    diagnostics: Sequence[Diagnostic] = (),
    digest: str = "",
) -> ProjectReport:
    matcher = matcher or NameMatcher()
    reports = sorted(
        (report_test(t, matcher) for t in tests),
        key=lambda r: (r.path, r.start_line, r.class_name, r.name),
    )
    diags = tuple(sorted(diagnostics, key=lambda d: (d.path, d.line, d.message)))
    return ProjectReport(tuple(reports), diags, regex_digest=digest or regex_digest(default_regex_text()))


def analyze_project(root: Path | str, config: Optional[AnalyzeConfig] = None) -> ProjectReport:
    """Parse, match, classify and aggregate every test under ``root``."""
    config = config or AnalyzeConfig()
    regex_text = Path(config.regexes).read_text("utf-8") if config.regexes else default_regex_text()
    tagger = Tagger(load_lexicon(config.lexicon)) if config.lexicon else None
    matcher = NameMatcher(parse_regexes(regex_text), tagger)
    tests, diagnostics = parse_project(root, config.include, config.exclude, config.jobs)
    return analyze_tests(tests, matcher, diagnostics, regex_digest(regex_text))


# --- rendering -----------------------------------------------------------------------


def render_report(report: ProjectReport, fmt: str = "text", only: Sequence[str] = (), stats: bool = False) -> bytes:
    if fmt == "text":
        return _render_text(report, only, stats).encode("utf-8")
    if fmt == "records":
        return _render_records(report, only).encode("utf-8")
    raise UnknownFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _selected(report: ProjectReport, only: Sequence[str]) -> list[TestReport]:
    return [t for t in report.tests if not only or t.outcome.value in only]


def _cell(ext: Optional[Extraction], comp: Component) -> str:
    value = ext.get(comp) if ext is not None else None
    return value if value is not None else "-"


def _triple_lines(t: TestReport) -> list[str]:
    body = t.body_match.extraction if t.body_match else None
    name = t.name_match.extraction if t.name_match else None
    rows = [("", "action", "predicate", "scenario")]
    rows.append(("body", *(_cell(body, c) for c in COMPONENTS)))
    rows.append(("name", *(_cell(name, c) for c in COMPONENTS)))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    out = []
    for i, row in enumerate(rows):
        sep = "   " if i == 0 else " = "
        joiner = "  " if i == 0 else ", "
        cells = joiner.join(v.ljust(w) for v, w in zip(row[1:], widths[1:]))
        opener, closer = (" ", " ") if i == 0 else ("(", ")")
        line = f"    {row[0].ljust(widths[0])}{sep}{opener}{cells}{closer}"
        if i == 1 and t.body_match:
            line += f"  [{t.body_match.pattern.value}]"
        if i == 2 and t.name_match:
            sub = f"/{t.name_match.sub_pattern}" if t.name_match.sub_pattern else ""
            line += f"  [{t.name_match.pattern.value}{sub}]"
        out.append(line.rstrip())
    return out


def _stats_table(title: str, rows: Sequence[StatRow], overall: Optional[StatRow]) -> list[str]:
    width = max([len(r.label) for r in rows] + [len("Pattern"), len("Overall")])
    out = [title, f"  {'Pattern'.ljust(width)}  # Matches  (%)"]
    for r in (*rows, *([overall] if overall else [])):
        out.append(f"  {r.label.ljust(width)}  {r.count:9d}  {r.percent:6.2f}")
    return out


def _render_text(report: ProjectReport, only: Sequence[str], stats: bool) -> str:
    lines = [
        f"namecheck {report.tool_version} (catalog {report.catalog_version}, schema {report.schema_version})",
        f"tests: {len(report.tests)}  "
        + "  ".join(f"{k}: {report.counts.get(k, 0)}" for k in ("descriptive", "non-descriptive", "unknown")),
        "",
    ]
    for t in _selected(report, only):
        where = f"{t.path}:{t.start_line}"
        if t.outcome is Outcome.NON_DESCRIPTIVE:
            lines.append(f"NON-DESCRIPTIVE  {t.test_id}  ({where})")
            lines.extend(_triple_lines(t))
            for s in t.suggestions:
                lines.append(f"    - {s.describe()}")
            for note in t.notes:
                lines.append(f"    note: {note}")
            lines.append("")
        else:
            extra = ""
            if t.outcome is Outcome.DESCRIPTIVE and t.suggestions:
                extra = "  (" + "; ".join(s.describe() for s in t.suggestions) + ")"
            lines.append(f"{t.outcome.value.upper():<16} {t.test_id}  ({where}){extra}")
    for d in report.diagnostics:
        lines.append(f"diagnostic: {d.path}:{d.line}: {d.message}")
    if stats:
        st = report.stats
        lines.append("")
        lines.extend(_stats_table("Name pattern match rates", st.name_rows, st.name_overall))
        lines.append("")
        lines.extend(_stats_table("Body pattern match rates", st.body_rows, st.body_overall))
        lines.append("")
        lines.extend(_stats_table("Body pattern families", st.body_family_rows, None))
    return "\n".join(lines).rstrip("\n") + "\n"


def _ext_record(ext: Extraction) -> dict:
    return {c.value: ext.get(c) for c in COMPONENTS}


def test_record(t: TestReport) -> dict:
    name_match = body_match = None
    if t.name_match is not None:
        name_match = {"pattern": t.name_match.pattern.value, "sub_pattern": t.name_match.sub_pattern}
        name_match.update(_ext_record(t.name_match.extraction))
    if t.body_match is not None:
        body_match = {"pattern": t.body_match.pattern.value, "notes": list(t.body_match.notes)}
        body_match.update(_ext_record(t.body_match.extraction))
    return {
        "record": "test",
        "class": t.class_name,
        "name": t.name,
        "path": t.path,
        "start_line": t.start_line,
        "end_line": t.end_line,
        "name_match": name_match,
        "body_match": body_match,
        "outcome": t.outcome.value,
        "component_results": {c.value: r.value for c, r in t.classification.component_results.items()},
        "suggestions": [
            {
                "kind": s.kind.value,
                "component": s.component.value,
                "name_value": s.name_value,
                "body_value": s.body_value,
            }
            for s in t.suggestions
        ],
        "notes": list(t.notes),
    }


test_record.__test__ = False  # type: ignore[attr-defined]


def _rows(rows: Sequence[StatRow]) -> list[dict]:
    return [{"pattern": r.label, "count": r.count, "percent": r.percent} for r in rows]


def _render_records(report: ProjectReport, only: Sequence[str]) -> str:
    selected = _selected(report, only)
    records = [
        {
            "record": "header",
            "schema_version": report.schema_version,
            "tool_version": report.tool_version,
            "catalog_version": report.catalog_version,
            "regex_digest": report.regex_digest,
            "total_tests": len(report.tests),
            "counts": report.counts,
        }
    ]
    records += [test_record(t) for t in selected]
    records += [
        {"record": "diagnostic", "path": d.path, "line": d.line, "message": d.message} for d in report.diagnostics
    ]
    st = report.stats
    records.append(
        {
            "record": "stats",
            "total": st.total,
            "name": _rows(st.name_rows),
            "name_overall": _rows([st.name_overall])[0],
            "body": _rows(st.body_rows),
            "body_overall": _rows([st.body_overall])[0],
            "body_families": _rows(st.body_family_rows),
        }
    )
    return "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n" for r in records)


def _ext_from(record: dict, source: Source) -> Extraction:
    return Extraction(source, **{c.value: record.get(c.value) for c in COMPONENTS})


def load_records(data: bytes | str) -> ProjectReport:
    """Parse the records format back into a report (stats records are derived and skipped)."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    header = None
    tests, diags = [], []
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        kind = rec.get("record")
        if kind == "header":
            header = rec
        elif kind == "test":
            nm = rec["name_match"]
            bm = rec["body_match"]
            tests.append(
                TestReport(
                    rec["class"],
                    rec["name"],
                    rec["path"],
                    rec["start_line"],
                    rec["end_line"],
                    NameMatch(NamePatternId(nm["pattern"]), _ext_from(nm, Source.NAME), nm["sub_pattern"])
                    if nm
                    else None,
                    BodyMatch(BodyPatternId(bm["pattern"]), _ext_from(bm, Source.BODY), tuple(bm["notes"]))
                    if bm
                    else None,
                    Classification(
                        Outcome(rec["outcome"]),
                        {Component(k): ComponentResult(v) for k, v in rec["component_results"].items()},
                    ),
                    tuple(
                        Suggestion(
                            SuggestionKind(s["kind"]), Component(s["component"]), s["name_value"], s["body_value"]
                        )
                        for s in rec["suggestions"]
                    ),
                    tuple(rec["notes"]),
                )
            )
        elif kind == "diagnostic":
            diags.append(Diagnostic(rec["path"], rec["line"], rec["message"]))
    if header is None:
        raise ValueError("records lack a header")
    return ProjectReport(
        tuple(tests),
        tuple(diags),
        header["tool_version"],
        header["catalog_version"],
        header["schema_version"],
        header["regex_digest"],
        dict(header["counts"]),
    )
