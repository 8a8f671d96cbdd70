import time
from contextlib import contextmanager

import numpy as np
import pytest

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion, with its runtime."""

    @contextmanager
    def criterion(number, description, limit_seconds):
        start = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit_seconds, (
                f"criterion {number} took {elapsed:.2f}s, budget {limit_seconds}s")
        except BaseException:
            ACCEPTANCE_RESULTS[number] = ("FAIL", description,
                                          time.perf_counter() - start)
            raise
        ACCEPTANCE_RESULTS[number] = ("PASS", description, elapsed)

    return criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        status, description, elapsed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(
            f"criterion {number}: {status} ({elapsed:5.2f}s) {description}")
