import itertools
import math

import pytest

from arithomit import ArithmeticalMonoid


def brute_members(gens, bound):
    """Elements of <gens> up to bound, by closing {0} under adding generators."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y <= bound and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def brute_factorizations(gens, n):
    ranges = [range(n // g + 1) for g in gens]
    return sorted(z for z in itertools.product(*ranges) if sum(a * b for a, b in zip(z, gens)) == n)


def brute_lengths(gens, n):
    out = sorted({sum(z) for z in brute_factorizations(gens, n)})
    return tuple(out) or None


def arith_grid(a_max, d_max, w_min, w_max=None):
    for a in range(2, a_max + 1):
        for d in range(1, d_max + 1):
            if math.gcd(a, d) != 1:
                continue
            hi = a - 1 if w_max is None else min(w_max, a - 1)
            for w in range(w_min, hi + 1):
                yield ArithmeticalMonoid(a, d, w)


@pytest.fixture
def m11():
    return ArithmeticalMonoid(11, 1, 7)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or report.failed:
        prev = _criteria.get(crit, True)
        _criteria[crit] = prev and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{num:>2}] {title}")
