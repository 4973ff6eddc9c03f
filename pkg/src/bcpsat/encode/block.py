"""Block encodings X and Xa.

Each vertex splits ``[1, k]`` into consecutive blocks. Range variables
``R(u, a, b)`` (true iff ``c(u)`` lies in ``[a, b]``) are built along a
staircase: the first block chains backward (suffixes ``[a, e]``), the last
block forward (prefixes ``[s, b]``), middle blocks both ways. A singleton
range is the assignment variable itself.

A distance window ``[c, c + d - 1]`` is rewritten per vertex as a sum of
terms, one per block it touches. A term is either a single range literal
or the difference ``outer - inner`` of two nested chain ranges. X inlines
differences into the pairwise clauses; Xa names each difference with a
shared auxiliary ``S <-> outer & ~inner``.
"""

from __future__ import annotations

from ..cnf import R, S, X, CnfFormula
from ..instance import BcpInstance
from .config import EncodingConfig
from .problem import Block, EncodedProblem

# ("pos", lit) or ("diff", outer_lit, inner_lit, outer_range, inner_range)
Term = tuple


def block_layout(k: int, width: int) -> list[Block]:
    starts = list(range(1, k + 1, width))
    blocks: list[Block] = []
    for r, s in enumerate(starts):
        e = min(s + width - 1, k)
        if len(starts) == 1:
            kind = "both"
        elif r == 0:
            kind = "backward"
        elif r == len(starts) - 1:
            kind = "forward"
        else:
            kind = "both"
        blocks.append((s, e, kind))
    return blocks


def vertex_widths(inst: BcpInstance, config: EncodingConfig) -> list[int]:
    if config.width == "vary":
        return [inst.max_incident_weight(u) or config.block_width for u in range(inst.n)]
    return [config.block_width] * inst.n


class _VertexRanges:
    """Range literals of one vertex."""

    def __init__(self, f: CnfFormula, u: int, x: list[int], blocks: list[Block]) -> None:
        self.f = f
        self.u = u
        self.x = x
        self.blocks = blocks
        self.lits: dict[tuple[int, int], int] = {}
        for s, e, kind in blocks:
            if kind in ("backward", "both"):
                self._backward(s, e)
            if kind in ("forward", "both"):
                self._forward(s, e, amo=(kind == "forward"))

    def lit(self, a: int, b: int) -> int:
        if a == b:
            return self.x[a]
        return self.lits[(a, b)]

    def _range_var(self, a: int, b: int) -> tuple[int, bool]:
        if (a, b) in self.lits:
            return self.lits[(a, b)], False
        v = self.f.var(R(self.u, a, b))
        self.lits[(a, b)] = v
        return v, True

    def _define_or(self, r: int, xa: int, rest: int) -> None:
        f = self.f
        f.add_clause([-xa, r])
        f.add_clause([-rest, r])
        f.add_clause([-r, xa, rest])

    def _backward(self, s: int, e: int) -> None:
        # R[a,e] <-> x_a | R[a+1,e];  x_a -> ~R[a+1,e] keeps at most one color
        for a in range(e - 1, s - 1, -1):
            rest = self.lit(a + 1, e)
            r, new = self._range_var(a, e)
            if new:
                self._define_or(r, self.x[a], rest)
            self.f.add_clause([-self.x[a], -rest])

    def _forward(self, s: int, e: int, amo: bool) -> None:
        for b in range(s + 1, e + 1):
            rest = self.lit(s, b - 1)
            # the full block may already exist from the backward chain; the
            # second definition is equivalent
            r, _ = self._range_var(s, b)
            self._define_or(r, self.x[b], rest)
            if amo:
                self.f.add_clause([-self.x[b], -rest])

    def piece(self, blk: Block, a: int, b: int) -> Term:
        """Term for ``[a, b]``, which must lie inside block ``blk``."""
        s, e, kind = blk
        back = kind in ("backward", "both")
        fwd = kind in ("forward", "both")
        if a == s and b == e:
            return ("pos", self.lit(s, e))
        if b == e and back:
            return ("pos", self.lit(a, e))
        if a == s and fwd:
            return ("pos", self.lit(s, b))
        if back:
            return ("diff", self.lit(a, e), self.lit(b + 1, e), (a, e), (b + 1, e))
        return ("diff", self.lit(s, b), self.lit(s, a - 1), (s, b), (s, a - 1))

    def window(self, a: int, b: int) -> list[Term]:
        return [
            self.piece(blk, max(a, blk[0]), min(b, blk[1]))
            for blk in self.blocks
            if blk[0] <= b and blk[1] >= a
        ]


def window_terms(
    inst: BcpInstance, k: int, config: EncodingConfig, u: int, a: int, b: int
) -> list[tuple]:
    """Decompose vertex ``u``'s window ``[a, b]`` for inspection.

    Terms come back with variable keys instead of literals:
    ``("pos", key)`` or ``("diff", outer_key, inner_key)``.
    """
    f = CnfFormula()
    x = [0] + [f.var(X(u, j)) for j in range(1, k + 1)]
    w = vertex_widths(inst, config)[u]
    ranges = _VertexRanges(f, u, x, block_layout(k, w))
    key = f.registry.reverse
    return [
        ("pos", key(t[1])) if t[0] == "pos" else ("diff", key(t[1]), key(t[2]))
        for t in ranges.window(a, b)
    ]


def encode_block(inst: BcpInstance, k: int, config: EncodingConfig) -> EncodedProblem:
    aux = config.method == "Xa"
    f = CnfFormula()
    x = [[0] + [f.var(X(u, j)) for j in range(1, k + 1)] for u in range(inst.n)]
    widths = vertex_widths(inst, config)
    layouts = [block_layout(k, w) for w in widths]
    ranges = [_VertexRanges(f, u, x[u], layouts[u]) for u in range(inst.n)]

    for vr in ranges:
        tops = [vr.lit(s, e) for s, e, _ in vr.blocks]
        f.add_clause(tops)
        for i in range(len(tops)):
            for j in range(i + 1, len(tops)):
                f.add_clause([-tops[i], -tops[j]])

    subtractions: dict[tuple, int] = {}

    def negate(u: int, t: Term) -> list[int]:
        if t[0] == "pos":
            return [-t[1]]
        _, outer, inner, ro, ri = t
        if not aux:
            return [-outer, inner]
        key = (u, ro, ri)
        sv = subtractions.get(key)
        if sv is None:
            sv = f.var(S(u, *ro, *ri))
            subtractions[key] = sv
            f.add_clause([-sv, outer])
            f.add_clause([-sv, -inner])
            f.add_clause([-outer, inner, sv])
        return [-sv]

    for u, v, d in inst.edges:
        span = min(d, k)
        for c in range(1, k - span + 2):
            hi = c + span - 1
            tu = [negate(u, t) for t in ranges[u].window(c, hi)]
            tv = [negate(v, t) for t in ranges[v].window(c, hi)]
            for lu in tu:
                for lv in tv:
                    f.add_clause(lu + lv)

    return EncodedProblem(inst, k, config, f, xvars=x, blocks=layouts)
