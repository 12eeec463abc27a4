import time
from functools import lru_cache

import pytest

from unionclosed import enumerate_pure, enumerate_union_closed, make_family

_SESSION_START = time.monotonic()
SUITE_BUDGET_SECONDS = 300.0

# filled by test_acceptance.py: criterion number -> (passed, description)
ACCEPTANCE_RESULTS = {}


def f1():
    return make_family(2, [[], [1], [1, 2]])


def f2():
    return make_family(2, [[], [2], [1, 2]])


def fig1():
    return make_family(3, [[], [1], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]])


@pytest.fixture
def F1():
    return f1()


@pytest.fixture
def F2():
    return f2()


@pytest.fixture
def FIG1():
    return fig1()


@lru_cache(maxsize=None)
def union_closed_upto(n):
    """Union-closed families over [k] for every k <= n."""
    out = []
    for k in range(n + 1):
        out.extend(enumerate_union_closed(k))
    return tuple(out)


@lru_cache(maxsize=None)
def pure_covering(n):
    """Pure union-closed families whose union is exactly [n]."""
    return tuple(enumerate_pure(n))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.monotonic() - _SESSION_START
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE_RESULTS):
            ok, text = ACCEPTANCE_RESULTS[num]
            terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {text}")
        ok = elapsed < SUITE_BUDGET_SECONDS
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] 10. full suite wall-clock {elapsed:.1f}s "
            f"< {SUITE_BUDGET_SECONDS:.0f}s")


def pytest_sessionfinish(session, exitstatus):
    if time.monotonic() - _SESSION_START >= SUITE_BUDGET_SECONDS and exitstatus == 0:
        session.exitstatus = 1
