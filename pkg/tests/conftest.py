"""Terminal reporting: one pass/fail line per acceptance criterion."""

from __future__ import annotations

import pytest

ACCEPTANCE_FILE = "test_acceptance.py"
_outcomes: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if ACCEPTANCE_FILE not in str(item.fspath):
        return
    if report.when == "call":
        _outcomes[item.name] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and not report.passed:
        _outcomes[item.name] = "SKIP" if report.skipped else "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_outcomes):
        terminalreporter.write_line(f"{_outcomes[name]} {name}")
