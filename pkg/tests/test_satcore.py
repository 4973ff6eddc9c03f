import random
import stat
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcpsat.encode import EncodingConfig, encode
from bcpsat.instance import BcpInstance
from bcpsat.satcore import (
    CdclSolver,
    ExternalSolver,
    SolverError,
    Status,
    make_backend,
)
from bcpsat.satcore.external import parse_solver_output

from conftest import pigeonhole, random_3cnf, solve_formula, truth_table_sat


def test_unit_propagation():
    out = solve_formula([[1], [-1, 2]])
    assert out.status is Status.SAT
    assert out.value(1) and out.value(2)


def test_contradicting_units():
    assert solve_formula([[1], [-1]]).status is Status.UNSAT


def test_empty_clause():
    assert solve_formula([[]]).status is Status.UNSAT


def test_empty_formula():
    assert solve_formula([]).status is Status.SAT


@pytest.mark.parametrize("holes", [3, 4, 5])
def test_pigeonhole_unsat(holes):
    out = solve_formula(pigeonhole(holes + 1, holes))
    assert out.status is Status.UNSAT
    assert out.stats.conflicts > 0


def test_pigeonhole_fits():
    clauses = pigeonhole(5, 5)
    out = solve_formula(clauses)
    assert out.status is Status.SAT
    assert all(any(out.value(l) for l in c) for c in clauses)


def test_models_satisfy_formula():
    rng = random.Random(7)
    for _ in range(100):
        clauses = random_3cnf(rng, 20, 85)
        out = solve_formula(clauses)
        if out.status is Status.SAT:
            assert all(any(out.value(l) for l in c) for c in clauses)


@given(st.integers(1, 10), st.data())
@settings(max_examples=150, deadline=None)
def test_agrees_with_truth_table(nvars, data):
    lit = st.integers(1, nvars).flatmap(lambda v: st.sampled_from([v, -v]))
    clauses = data.draw(st.lists(st.lists(lit, min_size=1, max_size=3), max_size=5 * nvars))
    assert (solve_formula(clauses).status is Status.SAT) == truth_table_sat(nvars, clauses)


def test_assumptions():
    s = CdclSolver()
    s.add_clauses([[1, 2], [-1, 3]])
    assert s.solve([-2]).status is Status.SAT
    out = s.solve([-2, -3])
    assert out.status is Status.UNSAT
    # assumptions do not stick
    assert s.solve().status is Status.SAT
    assert s.solve([-1]).value(2)


def test_assumption_soundness_random():
    rng = random.Random(11)
    checked = 0
    for _ in range(150):
        nvars = 12
        clauses = random_3cnf(rng, nvars, 45)
        s = CdclSolver()
        s.add_clauses(clauses)
        if s.solve().status is not Status.SAT:
            continue
        assumptions = [v if rng.random() < 0.5 else -v for v in rng.sample(range(1, nvars + 1), 4)]
        out = s.solve(assumptions)
        expect = truth_table_sat(nvars, clauses + [[a] for a in assumptions])
        assert (out.status is Status.SAT) == expect
        if out.status is Status.SAT:
            assert all(out.value(a) for a in assumptions)
        checked += 1
    assert checked > 50


def test_incremental_clause_addition():
    s = CdclSolver()
    s.add_clauses(pigeonhole(4, 4))
    assert s.solve().status is Status.SAT
    # forbid hole 0 entirely: now four pigeons share three holes
    for p in range(4):
        s.add_clause([-(p * 4 + 1)])
    assert s.solve().status is Status.UNSAT
    assert s.solve().status is Status.UNSAT


def test_determinism():
    rng = random.Random(3)
    clauses = random_3cnf(rng, 40, 170)
    runs = []
    for _ in range(2):
        out = solve_formula(clauses)
        runs.append((out.status, out.model, out.stats.conflicts))
    assert runs[0] == runs[1]


def test_conflict_limit_gives_unknown():
    s = CdclSolver(conflict_limit=5)
    s.add_clauses(pigeonhole(8, 7))
    assert s.solve().status is Status.UNKNOWN


def test_unknown_literal_variable_rejected():
    with pytest.raises(ValueError):
        CdclSolver().add_clause([0])


# ---------------------------------------------------------- external


def test_parse_output():
    out = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3)
    assert out.status is Status.SAT and out.model == [False, True, False, True]
    assert parse_solver_output("s UNSATISFIABLE\n", 3).status is Status.UNSAT
    assert parse_solver_output("", 1, returncode=20).status is Status.UNSAT
    with pytest.raises(SolverError):
        parse_solver_output("s MAYBE\n", 1)
    with pytest.raises(SolverError):
        parse_solver_output("garbage\n", 1, returncode=0)


STUB = r'''
import itertools, sys
path = sys.argv[1] if len(sys.argv) > 1 else None
text = open(path).read() if path else sys.stdin.read()
clauses, n = [], 0
for line in text.splitlines():
    t = line.split()
    if not t or t[0] == "c":
        continue
    if t[0] == "p":
        n = int(t[2])
        continue
    clauses.append([int(x) for x in t[:-1]])
for bits in itertools.product((False, True), repeat=n):
    if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
        print("s SATISFIABLE")
        print("v " + " ".join(str(i + 1 if b else -(i + 1)) for i, b in enumerate(bits)) + " 0")
        sys.exit(10)
print("s UNSATISFIABLE")
sys.exit(20)
'''


@pytest.fixture
def stub_solver(tmp_path):
    path = tmp_path / "stubsat.py"
    path.write_text(STUB)
    path.chmod(path.stat().st_mode | stat.S_IEXEC)
    return f"{sys.executable} {path}"


@pytest.mark.parametrize("template", ["{cmd} {{cnf}}", "{cmd}"])
def test_external_adapter(stub_solver, template):
    s = ExternalSolver(template.format(cmd=stub_solver))
    s.add_clause([1])
    out = s.solve()
    assert out.status is Status.SAT and out.value(1)
    assert s.solve([-1]).status is Status.UNSAT


def test_external_on_encoding(stub_solver):
    inst = BcpInstance(2, ((0, 1, 3),))
    for k, expect in ((3, Status.UNSAT), (4, Status.SAT)):
        enc = encode(inst, k, EncodingConfig("1G"))
        s = make_backend(f"external:{stub_solver} {{cnf}}")
        s.add_clauses(enc.formula.clauses)
        assert s.solve().status is expect


def test_external_launch_failure():
    s = ExternalSolver("/nonexistent/solver-binary")
    s.add_clause([1])
    with pytest.raises(SolverError):
        s.solve()


def test_external_timeout(tmp_path):
    script = tmp_path / "slow.py"
    script.write_text("import time\ntime.sleep(5)\n")
    s = ExternalSolver(f"{sys.executable} {script}")
    s.add_clause([1])
    assert s.solve(time_limit=0.3).status is Status.UNKNOWN


def test_make_backend_rejects_unknown():
    with pytest.raises(ValueError):
        make_backend("glucose")
