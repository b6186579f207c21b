from pathlib import Path

import pytest

from namecheck.source import parse_tests_from_text

FIXTURES = Path(__file__).parent / "fixtures"
SAMPLES = FIXTURES / "samples"


def java_test(body: str, name: str = "testSomething", fields: str = "") -> "TestCase":
    """Wrap statements in a JUnit 4 class and parse the single test back out."""
    src = (
        "import org.junit.Test;\n"
        "public class SampleTest {\n"
        f"{fields}\n"
        "    @Test\n"
        f"    public void {name}() {{\n"
        f"{body}\n"
        "    }\n"
        "}\n"
    )
    tests = parse_tests_from_text(src, "SampleTest.java")
    assert len(tests) == 1, src
    return tests[0]


@pytest.fixture
def samples_dir() -> Path:
    return SAMPLES


@pytest.fixture(scope="session")
def sample_tests():
    from namecheck.source import parse_project

    tests, diags = parse_project(SAMPLES)
    assert not diags
    return {t.name: t for t in tests}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
