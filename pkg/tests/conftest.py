"""Shared fixtures, plus a terminal summary for the acceptance checklist."""

from __future__ import annotations

import pytest

_results: list[tuple[int, str, bool]] = []


@pytest.fixture
def criterion():
    """Record a pass/fail line for the end-of-run checklist, then assert."""

    def _check(number: int, description: str, ok: bool) -> None:
        _results.append((number, description, ok))
        assert ok, f"criterion {number} failed: {description}"

    return _check


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, ok in sorted(_results):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{number:2d}] {verdict}  {description}")
