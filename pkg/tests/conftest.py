from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from bcpsat.instance import BcpInstance, random_instance
from bcpsat.satcore import CdclSolver, Status

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

A, B, C, D = range(4)
KITE_EDGES = ((A, B, 2), (B, C, 3), (C, D, 1), (D, A, 2), (A, C, 1))
KITE_COLORING = (1, 3, 6, 4)
# brute_force_optimal(kite, 10), cross-checked by hand: B-C needs 3 apart
KITE_OPTIMUM = 4


@pytest.fixture(scope="session")
def kite() -> BcpInstance:
    return BcpInstance(4, KITE_EDGES, name="kite")


def solve_formula(clauses, assumptions=()):
    s = CdclSolver()
    s.add_clauses(clauses)
    return s.solve(assumptions)


def is_sat(clauses) -> bool:
    return solve_formula(clauses).status is Status.SAT


def truth_table_sat(nvars: int, clauses) -> bool:
    for bits in itertools.product((False, True), repeat=nvars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return True
    return False


def small_corpus(count: int, seed0: int = 0):
    """Random instances with n in [3, 8], edge probability 0.5, d in [1, 4]."""
    return [random_instance(3 + (i % 6), 0.5, 4, seed=seed0 + i) for i in range(count)]


def pigeonhole(pigeons: int, holes: int) -> list[list[int]]:
    """PHP(pigeons -> holes); variable ``p * holes + h + 1`` puts pigeon p in hole h."""
    var = lambda p, h: p * holes + h + 1  # noqa: E731
    clauses = [[var(p, h) for h in range(holes)] for p in range(pigeons)]
    for h in range(holes):
        for p in range(pigeons):
            for q in range(p + 1, pigeons):
                clauses.append([-var(p, h), -var(q, h)])
    return clauses


def random_3cnf(rng, nvars: int, nclauses: int) -> list[list[int]]:
    return [
        [v if rng.random() < 0.5 else -v for v in rng.sample(range(1, nvars + 1), 3)]
        for _ in range(nclauses)
    ]


# ------------------------------------------------- acceptance reporting

_CRITERIA: dict[tuple[int, str], str] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        outcome = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _CRITERIA[number, title] = outcome
    elif report.when == "teardown" and report.outcome == "failed":
        _CRITERIA[number, title] = "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in sorted(_CRITERIA, key=lambda key: key[0]):
        outcome = _CRITERIA[number, title]
        terminalreporter.write_line(f"criterion {number:>2}  {outcome}  {title}")
