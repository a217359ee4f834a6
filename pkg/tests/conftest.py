import random
import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE = {}


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def criterion():
    """Time a block against its limit and record a PASS/FAIL line for the summary."""

    @contextmanager
    def run(number, title, limit_s):
        start = time.perf_counter()
        _ACCEPTANCE[number] = f"criterion {number:2d} FAIL  {title}"
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < limit_s
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE[number] = f"criterion {number:2d} {status}  {title}  ({elapsed:.2f}s, limit {limit_s}s)"
        assert ok, f"took {elapsed:.2f}s, limit {limit_s}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[n])
