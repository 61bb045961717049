from __future__ import annotations

import pytest

_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record one acceptance line; returns ``ok`` so the caller can assert on it."""

    def record(tag: str, text: str, ok: bool) -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {tag}: {text}"
        _LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
