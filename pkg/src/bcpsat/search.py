"""Optimal span by linear descent from the DSatur bound."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .bounds import dsatur_bound
from .encode import EncodedProblem, EncodingConfig, assumptions_for_span, decode, encode
from .instance import BcpInstance, Coloring, validate
from .satcore import SatBackend, Status, make_backend


class InfeasibleError(RuntimeError):
    """The formula at the heuristic bound was UNSAT; the encoder or solver is broken."""


@dataclass(frozen=True)
class Iteration:
    k: int
    status: Status
    time: float
    conflicts: int


@dataclass
class OptimalResult:
    optimal_span: int
    witness: Coloring
    iterations: list[Iteration] = field(default_factory=list)
    total_time: float = 0.0
    proven: bool = False
    upper_bound: int = 0
    num_vars: int = 0
    num_clauses: int = 0
    # "initial" (encoding at H, incremental) or "final" (last encoding built)
    count_basis: str = "initial"


BackendFactory = Callable[[], SatBackend]


def _factory(backend: str | BackendFactory) -> BackendFactory:
    if callable(backend):
        return backend
    return lambda: make_backend(backend)


def solve_optimal(
    inst: BcpInstance,
    config: EncodingConfig,
    time_limit: float | None = None,
    backend: str | BackendFactory = "builtin",
) -> OptimalResult:
    """Smallest feasible span under ``config``.

    Starts at the DSatur bound H and lowers the bound by one until the solver
    says UNSAT (then the previous bound is optimal and ``proven`` is set) or
    the time budget, shared across all calls, runs out.
    """
    start = time.perf_counter()
    new_backend = _factory(backend)
    bound = dsatur_bound(inst)
    if inst.n == 0:
        return OptimalResult(0, bound.witness, proven=True, count_basis="initial")

    def remaining() -> float | None:
        if time_limit is None:
            return None
        return max(0.0, time_limit - (time.perf_counter() - start))

    iterations: list[Iteration] = []

    def run(solver: SatBackend, k: int, assumptions: list[int] = ()):
        budget = remaining()
        if budget is not None and budget <= 0:
            iterations.append(Iteration(k, Status.UNKNOWN, 0.0, 0))
            return None
        t0 = time.perf_counter()
        out = solver.solve(assumptions, time_limit=budget)
        iterations.append(Iteration(k, out.status, time.perf_counter() - t0, out.stats.conflicts))
        return out

    def witness(enc: EncodedProblem, model) -> Coloring:
        col = decode(enc, model)
        bad = validate(inst, col)
        if bad or col.span > enc.k:
            raise RuntimeError(f"{config.label()}: decoded coloring violates {bad[:3]}")
        return col

    incremental = config.incremental != "none"
    k = bound.H
    enc = encode(inst, k, config)
    first_enc = enc
    solver = new_backend()
    solver.add_clauses(enc.formula.clauses)
    out = run(solver, k)
    best = bound.witness
    status = Status.UNKNOWN if out is None else out.status
    if status is Status.UNSAT:
        raise InfeasibleError(f"{config.label()}: UNSAT at heuristic bound {k}")
    if status is Status.SAT:
        best = witness(enc, out.model)

    pinned: set[int] = set()
    while status is Status.SAT and k > 1:
        k -= 1
        if incremental:
            lits = assumptions_for_span(enc, k)
            if config.incremental == "x":
                # bounds only shrink, so restrictions can be permanent
                for lit in lits:
                    if lit not in pinned:
                        solver.add_clause([lit])
                        pinned.add(lit)
                lits = []
            out = run(solver, k, lits)
        else:
            solver.reset()
            solver = new_backend()
            enc = encode(inst, k, config)
            solver.add_clauses(enc.formula.clauses)
            out = run(solver, k)
        status = Status.UNKNOWN if out is None else out.status
        if status is Status.SAT:
            best = witness(enc, out.model)

    if status is Status.UNSAT:
        optimum, proven = k + 1, True
    elif status is Status.SAT:
        optimum, proven = k, True  # reached k == 1
    else:
        optimum, proven = best.span, False

    counted = first_enc if incremental else enc
    return OptimalResult(
        optimal_span=optimum,
        witness=best,
        iterations=iterations,
        total_time=time.perf_counter() - start,
        proven=proven,
        upper_bound=bound.H,
        num_vars=counted.num_vars,
        num_clauses=counted.num_clauses,
        count_basis="initial" if incremental else "final",
    )
