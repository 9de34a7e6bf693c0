"""Shared pytest wiring.

The acceptance tests report one summary line per criterion; collecting the
lines here and printing them from ``pytest_terminal_summary`` keeps them
visible regardless of output capturing.
"""
from __future__ import annotations

import functools

ACCEPTANCE_LINES: list[tuple[int, str]] = []
CRITERION_NOTES: dict[int, list[str]] = {}


def criterion_note(num: int, text: str) -> None:
    """Attach a note (fallback flag, timing) to a criterion's summary line."""
    CRITERION_NOTES.setdefault(num, []).append(text)


def record_criterion(num: int, name: str, ok: bool, note: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    notes = ([note] if note else []) + CRITERION_NOTES.get(num, [])
    extra = f"  [{'; '.join(notes)}]" if notes else ""
    ACCEPTANCE_LINES.append((num, f"criterion {num} {status} - {name}{extra}"))


def criterion(num: int, name: str, note: str = ""):
    """Wrap an acceptance test so a summary line is recorded either way."""
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                record_criterion(num, name, False, note)
                raise
            record_criterion(num, name, True, note)
        return wrapper
    return deco


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
