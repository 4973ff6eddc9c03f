"""Exhaustive search oracle, independent of every encoder and of the SAT core.

Only meant for tiny instances (n <= 10, span <= ~20).
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import BcpInstance, Coloring


class SpanCapExceeded(Exception):
    """No feasible coloring with span <= cap; the optimum is unknown."""


@dataclass(frozen=True)
class OracleResult:
    optimal_span: int
    witness: Coloring
    nodes_explored: int


def _search(inst: BcpInstance, k: int) -> tuple[list[int] | None, int]:
    order = sorted(range(inst.n), key=lambda v: (-inst.degree(v), v))
    color = [0] * inst.n
    nodes = 0

    def place(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for c in range(1, k + 1):
            nodes += 1
            if all(not color[u] or abs(c - color[u]) >= d for u, d in inst.neighbors(v)):
                color[v] = c
                if place(i + 1):
                    return True
                color[v] = 0
        return False

    return (color if place(0) else None), nodes


def feasible_at(inst: BcpInstance, k: int) -> bool:
    """Whether some coloring with all colors in ``[1, k]`` satisfies every edge."""
    if k < 1:
        return inst.n == 0
    return _search(inst, k)[0] is not None


def brute_force_optimal(inst: BcpInstance, span_cap: int = 20) -> OracleResult:
    """Smallest span, found by trying ``k = 1, 2, ...`` up to ``span_cap``."""
    total = 0
    for k in range(1, span_cap + 1):
        color, nodes = _search(inst, k)
        total += nodes
        if color is not None:
            return OracleResult(k if inst.n else 0, Coloring(tuple(color)), total)
    raise SpanCapExceeded(f"{inst.name or 'instance'}: no coloring with span <= {span_cap}")
