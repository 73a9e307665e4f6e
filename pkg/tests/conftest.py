"""Shared pytest wiring for the acceptance-criteria report.

Each acceptance test wraps its body in the `criterion` context manager,
which records the outcome and enforces the runtime budget.  A terminal
summary hook then prints one PASS/FAIL line per criterion so the final
test log shows the acceptance status at a glance.
"""

import contextlib
import time

import pytest

_criterion_results: dict = {}


@pytest.fixture
def criterion():
    @contextlib.contextmanager
    def _criterion(number: int, title: str, budget_seconds: float):
        _criterion_results[number] = (title, False)
        start = time.perf_counter()
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget_seconds, (
            "criterion %d took %.2fs, over its %.0fs budget"
            % (number, elapsed, budget_seconds)
        )
        _criterion_results[number] = (title, True)

    return _criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criterion_results):
        title, passed = _criterion_results[number]
        terminalreporter.write_line(
            "[criterion %d] %s: %s" % (number, title, "PASS" if passed else "FAIL")
        )
