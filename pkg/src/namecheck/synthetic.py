"""Seeded generator of synthetic JUnit test classes for throughput and plumbing checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

VERBS = ("get", "set", "add", "remove", "parse", "build", "compute", "load", "save", "create", "update", "find")
NOUNS = ("User", "Order", "Node", "Token", "Config", "Account", "Item", "Graph", "Session", "Message")
EXCEPTIONS = ("IllegalArgumentException", "IllegalStateException", "IOException")


@dataclass(frozen=True)
class CorpusConfig:
    n_tests: int = 1000
    tests_per_class: int = 20
    seed: int = 0
    mislabel_rate: float = 0.3  # share of tests whose name talks about another method


def _method(rng: random.Random) -> tuple[str, str]:
    verb, noun = rng.choice(VERBS), rng.choice(NOUNS)
    return verb, noun


def _template(rng: random.Random, verb: str, noun: str) -> tuple[str, list[str]]:
    """Return (name suffix style, body lines) for one randomly chosen body shape."""
    call = f"{verb}{noun}"
    var = noun[0].lower() + noun[1:]
    kind = rng.randrange(10)
    if kind == 0:
        return "plain", [f"{noun} result = {call}();", "assertNotNull(result);"]
    if kind == 1:
        return "plain", [f"assertEquals(expected{noun}(), fixture.{call}());"]
    if kind == 2:
        exc = rng.choice(EXCEPTIONS)
        return "throws", [
            "try {",
            f"    fixture.{call}(null);",
            "    fail();",
            f"}} catch ({exc} e) {{",
            "}",
        ]
    if kind == 3:
        return "plain", [
            f"for ({noun} {var} : fixture.all{noun}s()) {{",
            f"    {var}.{call}();",
            f"    assertTrue({var}.isValid());",
            "}",
        ]
    if kind == 4:
        return "plain", [
            f"{noun} {var} = fixture.make{noun}();",
            f"if ({var}.isReady()) {{",
            f"    {var}.{call}();",
            "} else {",
            f"    assertFalse({var}.isValid());",
            "}",
        ]
    if kind == 5:
        return "plain", [f"new {noun}().configure().{call}();"]
    if kind == 6:
        return "plain", [
            f"{noun} {var} = new {noun}();",
            f"{var}.{call}();",
            f"{var}.close();",
        ]
    if kind == 7:
        return "plain", [
            f"{noun} {var} = new {noun}();",
            f"{var}.setName(\"n{rng.randrange(100)}\");",
            "fixture.reset();",
            f"{var}.{call}();",
            f"assertEquals(1, {var}.count());",
            f"assertTrue({var}.isValid());",
        ]
    if kind == 8:
        return "should", [
            f"{noun} {var} = fixture.make{noun}();",
            f"{var}.{call}();",
            f"assertTrue({var}.isValid());",
        ]
    return "plain", [f"assertNotNull(fixture.{call}());", f"assertEquals(expected{noun}(), fixture.{call}());"]


def _name(rng: random.Random, style: str, verb: str, noun: str, used: set[str]) -> str:
    if style == "throws":
        base = f"test{verb.capitalize()}{noun}Throws{rng.choice(('Exception', 'Error'))}"
    elif style == "should":
        base = f"should{verb.capitalize()}{noun}When{rng.choice(('Ready', 'Empty', 'Closed'))}"
    else:
        base = rng.choice((f"test{verb.capitalize()}{noun}", f"{verb}{noun}", f"test{noun}"))
    name, i = base, 2
    while name in used:
        name = f"{base}{i}"
        i += 1
    used.add(name)
    return name


def generate_class(rng: random.Random, class_name: str, n_tests: int, mislabel_rate: float) -> str:
    lines = [
        "package org.example.synthetic;",
        "",
        "import static org.junit.Assert.*;",
        "",
        "import org.junit.Test;",
        "",
        f"public class {class_name} {{",
        "    private Fixture fixture = new Fixture();",
    ]
    used: set[str] = set()
    for _ in range(n_tests):
        verb, noun = _method(rng)
        style, body = _template(rng, verb, noun)
        name_verb, name_noun = (verb, noun) if rng.random() >= mislabel_rate else _method(rng)
        name = _name(rng, style, name_verb, name_noun, used)
        lines += ["", "    @Test", f"    public void {name}() {{"]
        lines += [f"        {line}" for line in body]
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_corpus(root: Path | str, config: CorpusConfig = CorpusConfig()) -> list[Path]:
    """Write ``config.n_tests`` tests spread over classes under ``root``; same seed, same bytes."""
    rng = random.Random(config.seed)
    root = Path(root)
    pkg = root / "org" / "example" / "synthetic"
    pkg.mkdir(parents=True, exist_ok=True)
    paths = []
    remaining, index = config.n_tests, 0
    while remaining > 0:
        n = min(config.tests_per_class, remaining)
        name = f"Synthetic{index:04d}Test"
        path = pkg / f"{name}.java"
        path.write_text(generate_class(rng, name, n, config.mislabel_rate), "utf-8")
        paths.append(path)
        remaining -= n
        index += 1
    return paths
