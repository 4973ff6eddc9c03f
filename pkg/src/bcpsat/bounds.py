"""DSatur upper bound on the span, generalized to separation intervals."""

from __future__ import annotations

from dataclasses import dataclass

from .instance import BcpInstance, Coloring


@dataclass(frozen=True)
class BoundResult:
    H: int
    witness: Coloring


def _merged(intervals: list[tuple[int, int]], lo: int = 1) -> list[tuple[int, int]]:
    """Union of closed intervals clipped below at ``lo``, sorted and disjoint."""
    out: list[tuple[int, int]] = []
    for a, b in sorted(intervals):
        a = max(a, lo)
        if a > b:
            continue
        if out and a <= out[-1][1] + 1:
            if b > out[-1][1]:
                out[-1] = (out[-1][0], b)
        else:
            out.append((a, b))
    return out


def smallest_free_color(forbidden: list[tuple[int, int]]) -> int:
    """Smallest positive integer outside every ``[a, b]`` in ``forbidden``."""
    c = 1
    for a, b in _merged(forbidden):
        if a > c:
            break
        c = b + 1
    return c


def _saturation(forbidden: list[tuple[int, int]], H: int) -> int:
    return sum(min(b, H) - a + 1 for a, b in _merged(forbidden) if a <= H)


def dsatur_bound(inst: BcpInstance) -> BoundResult:
    """Greedy coloring, most saturated vertex first (ties: degree, then id).

    Saturation counts the colors in ``[1, H]`` that colored neighbors forbid,
    with ``H`` the largest color used so far.
    """
    n = inst.n
    color = [0] * n
    forbidden: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    H = 0
    for _ in range(n):
        best = -1
        best_key = None
        for v in range(n):
            if color[v]:
                continue
            key = (_saturation(forbidden[v], H), inst.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        c = smallest_free_color(forbidden[best])
        color[best] = c
        H = max(H, c)
        for u, d in inst.neighbors(best):
            if not color[u]:
                forbidden[u].append((c - d + 1, c + d - 1))
    return BoundResult(H=H, witness=Coloring(tuple(color)))
