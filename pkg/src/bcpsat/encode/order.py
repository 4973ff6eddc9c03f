"""Order encodings: one-variable (1G, 1L) and two-variable (2G, 2L).

Greater-than variables mean ``c(u) >= j`` and are constant outside
``[1, k]``: true below 1, false above k. Less-than variables mean
``c(u) <= j``: false below 1, true from k on. Literals fixed by those
constants are dropped from a clause (false) or drop the clause (true).
Distance clauses are emitted for both orientations of every edge.
"""

from __future__ import annotations

from ..cnf import X, Y, CnfFormula
from ..instance import BcpInstance
from .config import EncodingConfig
from .problem import EncodedProblem


def _alloc(f: CnfFormula, n: int, k: int, key) -> list[list[int]]:
    return [[0] + [f.var(key(u, j)) for j in range(1, k + 1)] for u in range(n)]


def _oriented(inst: BcpInstance):
    for u, v, d in inst.edges:
        yield u, v, d
        yield v, u, d


def _ge_order(f: CnfFormula, y: list[list[int]], k: int) -> None:
    for row in y:
        f.pin(row[1])
        for j in range(2, k + 1):
            f.add_clause([-row[j], row[j - 1]])


def _le_order(f: CnfFormula, y: list[list[int]], k: int) -> None:
    for row in y:
        f.pin(row[k])
        for j in range(1, k):
            f.add_clause([-row[j], row[j + 1]])


def _ge_outside(yv: list[int], k: int, j: int, d: int) -> list[int]:
    """Literals saying ``c(v) <= j - d`` or ``c(v) >= j + d`` (>= variables)."""
    lits = []
    lo = j - d + 1
    if lo > 1:
        lits.append(-yv[lo])
    hi = j + d
    if hi <= k:
        lits.append(yv[hi])
    return lits


def _le_outside(yv: list[int], k: int, j: int, d: int) -> list[int]:
    """Same condition over <= variables."""
    lits = []
    lo = j - d
    if lo >= 1:
        lits.append(yv[lo])
    hi = j + d - 1
    if hi < k:
        lits.append(-yv[hi])
    return lits


def encode_1g(inst: BcpInstance, k: int, config: EncodingConfig | None = None) -> EncodedProblem:
    f = CnfFormula()
    y = _alloc(f, inst.n, k, Y)
    _ge_order(f, y, k)
    for u, v, d in _oriented(inst):
        yu, yv = y[u], y[v]
        for j in range(1, k + 1):
            clause = [-yu[j]]
            if j < k:
                clause.append(yu[j + 1])
            clause.extend(_ge_outside(yv, k, j, d))
            f.add_clause(clause)
    enc = EncodedProblem(inst, k, config or EncodingConfig("1G"), f, yvars=y)
    enc.base_pins = {row[1] for row in y}
    return enc


def encode_1l(inst: BcpInstance, k: int, config: EncodingConfig | None = None) -> EncodedProblem:
    f = CnfFormula()
    y = _alloc(f, inst.n, k, Y)
    _le_order(f, y, k)
    for u, v, d in _oriented(inst):
        yu, yv = y[u], y[v]
        for j in range(1, k + 1):
            # c(u) == j  <=>  y[u][j] and not y[u][j-1]
            clause = [-yu[j]]
            if j > 1:
                clause.append(yu[j - 1])
            clause.extend(_le_outside(yv, k, j, d))
            f.add_clause(clause)
    enc = EncodedProblem(inst, k, config or EncodingConfig("1L"), f, yvars=y)
    enc.base_pins = {row[k] for row in y}
    return enc


def encode_2g(inst: BcpInstance, k: int, config: EncodingConfig | None = None) -> EncodedProblem:
    f = CnfFormula()
    y = _alloc(f, inst.n, k, Y)
    x = _alloc(f, inst.n, k, X)
    _ge_order(f, y, k)
    for xu, yu in zip(x, y):
        for j in range(1, k + 1):
            f.add_clause([-xu[j], yu[j]])
            if j < k:
                f.add_clause([-xu[j], -yu[j + 1]])
                f.add_clause([-yu[j], yu[j + 1], xu[j]])
            else:
                f.add_clause([-yu[j], xu[j]])
    for u, v, d in _oriented(inst):
        xu, yv = x[u], y[v]
        for j in range(1, k + 1):
            f.add_clause([-xu[j]] + _ge_outside(yv, k, j, d))
    enc = EncodedProblem(inst, k, config or EncodingConfig("2G"), f, xvars=x, yvars=y)
    enc.base_pins = {row[1] for row in y}
    return enc


def encode_2l(inst: BcpInstance, k: int, config: EncodingConfig | None = None) -> EncodedProblem:
    f = CnfFormula()
    y = _alloc(f, inst.n, k, Y)
    x = _alloc(f, inst.n, k, X)
    _le_order(f, y, k)
    for xu, yu in zip(x, y):
        for j in range(1, k + 1):
            f.add_clause([-xu[j], yu[j]])
            if j > 1:
                f.add_clause([-xu[j], -yu[j - 1]])
                f.add_clause([-yu[j], yu[j - 1], xu[j]])
            else:
                f.add_clause([-yu[j], xu[j]])
    for u, v, d in _oriented(inst):
        xu, yv = x[u], y[v]
        for j in range(1, k + 1):
            f.add_clause([-xu[j]] + _le_outside(yv, k, j, d))
    enc = EncodedProblem(inst, k, config or EncodingConfig("2L"), f, xvars=x, yvars=y)
    enc.base_pins = {row[k] for row in y}
    return enc
