"""Descriptiveness checks for JUnit test names: compare what a name says with what the body does."""

__version__ = "0.1.0"
# bumped whenever a pattern's structural rules or the dispatch order change
CATALOG_VERSION = "1"
# record schema of the machine-readable report
SCHEMA_VERSION = "1"

from .body_patterns import BodyMatch, BodyPatternId, match_body  # noqa: E402
from .compare import Classification, Outcome, Suggestion, classify, suggest  # noqa: E402
from .mining import ClosedPattern, filter_spanning, mine_closed  # noqa: E402
from .model import Extraction, Statement, StatementKind, TestCase  # noqa: E402
from .naming import NameMatch, NamePatternId, match_name, split_identifier  # noqa: E402

__all__ = [
    "BodyMatch",
    "BodyPatternId",
    "Classification",
    "ClosedPattern",
    "Extraction",
    "NameMatch",
    "NamePatternId",
    "Outcome",
    "Statement",
    "StatementKind",
    "Suggestion",
    "TestCase",
    "classify",
    "filter_spanning",
    "match_body",
    "match_name",
    "mine_closed",
    "split_identifier",
    "suggest",
]
