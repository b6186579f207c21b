"""Analysis settings and the JSON config file that can supply them."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

OUTCOME_NAMES = ("descriptive", "non-descriptive", "unknown")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class AnalyzeConfig:
    regexes: Optional[str] = None  # regex sub-pattern file; bundled set when None
    lexicon: Optional[str] = None  # tagger lexicon; bundled lexicon when None
    include: tuple[str, ...] = ("*.java",)
    exclude: tuple[str, ...] = ()
    only: tuple[str, ...] = ()  # outcome filter for rendering; empty shows all
    jobs: int = 1

    def __post_init__(self) -> None:
        bad = [o for o in self.only if o not in OUTCOME_NAMES]
        if bad:
            raise ConfigError(f"unknown outcome filter(s): {', '.join(bad)}")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")

    def merged(self, **overrides) -> "AnalyzeConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config(path: Path | str) -> AnalyzeConfig:
    """Read a JSON object whose keys mirror :class:`AnalyzeConfig`.

    Relative ``regexes``/``lexicon`` paths resolve against the config file's directory.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text("utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: expected a JSON object")
    known = {f.name for f in fields(AnalyzeConfig)}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConfigError(f"{path}: unknown key(s): {', '.join(unknown)}")
    values = dict(raw)
    for key in ("regexes", "lexicon"):
        if values.get(key):
            p = Path(values[key])
            values[key] = str(p if p.is_absolute() else path.parent / p)
    for key in ("include", "exclude", "only"):
        if key in values:
            if isinstance(values[key], str):
                values[key] = [values[key]]
            values[key] = tuple(values[key])
    try:
        return AnalyzeConfig(**values)
    except TypeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
