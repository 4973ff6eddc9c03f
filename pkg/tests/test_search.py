import pytest

from bcpsat.encode import EncodingConfig, all_configs
from bcpsat.instance import BcpInstance, validate
from bcpsat.satcore import CdclSolver, SolveOutcome, Status
from bcpsat.search import solve_optimal
from bcpsat.verify import brute_force_optimal

from conftest import KITE_OPTIMUM, small_corpus

RANK1 = EncodingConfig("Xa", "fixed", "x", True)


def test_pair():
    res = solve_optimal(BcpInstance(2, ((0, 1, 3),)), EncodingConfig("1G"))
    assert res.optimal_span == 4 and res.proven
    assert sorted(res.witness.color) == [1, 4]


def test_triangle():
    k3 = BcpInstance(3, ((0, 1, 1), (0, 2, 1), (1, 2, 1)))
    assert solve_optimal(k3, RANK1).optimal_span == 3


def test_empty_instance():
    res = solve_optimal(BcpInstance(0, ()), EncodingConfig("1G"))
    assert res.optimal_span == 0 and res.proven


@pytest.mark.parametrize("cfg", list(all_configs()), ids=str)
def test_kite_all_configs(kite, cfg):
    res = solve_optimal(kite, cfg)
    assert res.optimal_span == KITE_OPTIMUM and res.proven
    assert validate(kite, res.witness) == []


@pytest.mark.parametrize("cfg", [c for c in all_configs() if not c.symmetry], ids=str)
def test_trace_and_bounds(cfg):
    for inst in small_corpus(8, seed0=40):
        res = solve_optimal(inst, cfg)
        ks = [it.k for it in res.iterations]
        assert ks == list(range(res.upper_bound, res.upper_bound - len(ks), -1))
        assert res.optimal_span <= res.upper_bound
        assert res.iterations[-1].status is (Status.SAT if ks[-1] == 1 else Status.UNSAT)
        if res.optimal_span == res.upper_bound:
            assert len(ks) == 1 or res.iterations[1].status is Status.UNSAT
        assert res.count_basis == ("initial" if cfg.incremental != "none" else "final")


def test_matches_oracle():
    for inst in small_corpus(20, seed0=900):
        want = brute_force_optimal(inst, 40).optimal_span
        for cfg in (RANK1, EncodingConfig("1G", incremental="y"), EncodingConfig("2L")):
            assert solve_optimal(inst, cfg).optimal_span == want


def test_zero_budget_is_unproven(kite):
    res = solve_optimal(kite, EncodingConfig("1G"), time_limit=0.0)
    assert not res.proven
    assert res.optimal_span == res.upper_bound == 5
    assert validate(kite, res.witness) == []


class _GivesUpAfterFirstCall(CdclSolver):
    calls = 0

    def solve(self, assumptions=(), time_limit=None):
        type(self).calls += 1
        if type(self).calls > 1:
            return SolveOutcome(Status.UNKNOWN)
        return super().solve(assumptions, time_limit)


def test_unknown_midway_keeps_best():
    _GivesUpAfterFirstCall.calls = 0
    inst = BcpInstance(2, ((0, 1, 3),))
    res = solve_optimal(inst, EncodingConfig("1G"), backend=_GivesUpAfterFirstCall)
    assert not res.proven
    assert res.optimal_span == res.upper_bound == 4
    assert [it.status for it in res.iterations] == [Status.SAT, Status.UNKNOWN]
