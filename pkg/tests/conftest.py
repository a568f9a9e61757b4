from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ordram.patterns import PatternND  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def zoo() -> list[PatternND]:
    """Ten small forbidden patterns used across the extremal tests."""
    rows = [
        [[1]],
        [[1, 1]],
        [[1], [1]],
        [[1, 1], [1, 1]],
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[1, 1], [1, 0]],
        [[1, 0, 1]],
        [[0, 1, 1, 0], [1, 0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    ]
    return [PatternND.from_rows(r) for r in rows]


@pytest.fixture
def pattern_zoo() -> list[PatternND]:
    return zoo()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("ORDRAM_CACHE", str(tmp_path / "cache.jsonl"))


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
