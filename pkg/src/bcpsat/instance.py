"""BCP / BMCP instances, colorings, and the DIMACS-style ``.col`` format.

Vertices are 0-based internally and 1-based in files.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InstanceError(ValueError):
    """Malformed instance data or input file."""


@dataclass(frozen=True)
class BcpInstance:
    """Weighted undirected graph; edge ``(u, v, d)`` demands ``|c(u) - c(v)| >= d``."""

    n: int
    edges: tuple[tuple[int, int, int], ...]
    name: str = ""
    # derived, not part of equality
    _adj: tuple[tuple[tuple[int, int], ...], ...] = field(
        default=(), init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InstanceError(f"negative vertex count {self.n}")
        seen: set[tuple[int, int]] = set()
        canon = []
        for u, v, d in self.edges:
            if u == v:
                raise InstanceError(f"self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InstanceError(f"edge ({u}, {v}) out of range for n={self.n}")
            if d < 1:
                raise InstanceError(f"edge ({u}, {v}) has separation {d} < 1")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in seen:
                raise InstanceError(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
            canon.append((a, b, int(d)))
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, d in canon:
            adj[u].append((v, d))
            adj[v].append((u, d))
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int, int]], name: str = ""
    ) -> "BcpInstance":
        return cls(n=n, edges=tuple(edges), name=name)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, separation)`` pairs incident to ``v``."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree_vertex(self) -> int:
        """Highest-degree vertex, smallest id on ties."""
        if self.n == 0:
            raise InstanceError("empty instance has no vertices")
        return max(range(self.n), key=lambda v: (len(self._adj[v]), -v))

    def max_incident_weight(self, v: int) -> int:
        return max((d for _, d in self._adj[v]), default=0)

    @property
    def max_weight(self) -> int:
        return max((d for _, _, d in self.edges), default=0)

    @property
    def mean_weight(self) -> float:
        if not self.edges:
            return 0.0
        return sum(d for _, _, d in self.edges) / len(self.edges)


@dataclass(frozen=True)
class Coloring:
    """Per-vertex colors, all >= 1. ``span`` is the largest color."""

    color: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "color", tuple(int(c) for c in self.color))
        bad = [c for c in self.color if c < 1]
        if bad:
            raise InstanceError(f"colors must be >= 1, got {bad[0]}")

    @property
    def span(self) -> int:
        return max(self.color, default=0)

    def __len__(self) -> int:
        return len(self.color)

    def __getitem__(self, v: int) -> int:
        return self.color[v]


def validate(inst: BcpInstance, c: Coloring | Sequence[int]) -> list[tuple[int, int, int]]:
    """Return the edges violated by ``c``; empty iff the coloring is feasible."""
    colors = c.color if isinstance(c, Coloring) else tuple(c)
    if len(colors) != inst.n:
        raise InstanceError(f"coloring has {len(colors)} entries, instance has {inst.n} vertices")
    return [(u, v, d) for u, v, d in inst.edges if abs(colors[u] - colors[v]) < d]


def reflect(c: Coloring, k: int) -> Coloring:
    """Mirror every color inside ``[1, k]``: ``c'(v) = k + 1 - c(v)``."""
    for col in c.color:
        if not 1 <= col <= k:
            raise InstanceError(f"color {col} outside [1, {k}]")
    return Coloring(tuple(k + 1 - col for col in c.color))


# --------------------------------------------------------------------------
# .col reader / writer


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InstanceError(f"line {lineno}: expected integer, got {tok!r}") from None


def parse_col(text: str, name: str = "") -> BcpInstance:
    """Parse a ``.col`` instance; edge lines without a weight get ``d = 1``."""
    n: int | None = None
    weights: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise InstanceError(f"line {lineno}: second header")
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise InstanceError(f"line {lineno}: malformed header {raw.strip()!r}")
            n = _int(parts[2], lineno)
            _int(parts[3], lineno)
            if n < 0:
                raise InstanceError(f"line {lineno}: negative vertex count")
        elif tag == "e":
            if n is None:
                raise InstanceError(f"line {lineno}: edge before header")
            if len(parts) not in (3, 4):
                raise InstanceError(f"line {lineno}: malformed edge {raw.strip()!r}")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            d = _int(parts[3], lineno) if len(parts) == 4 else 1
            for x in (u, v):
                if not 1 <= x <= n:
                    raise InstanceError(f"line {lineno}: vertex {x} outside [1, {n}]")
            if u == v:
                raise InstanceError(f"line {lineno}: self-loop on vertex {u}")
            if d < 1:
                raise InstanceError(f"line {lineno}: separation {d} < 1")
            key = (min(u, v) - 1, max(u, v) - 1)
            old = weights.get(key)
            if old is not None and old != d:
                raise InstanceError(
                    f"line {lineno}: edge {u}-{v} repeated with weight {d} (was {old})"
                )
            weights[key] = d
        else:
            raise InstanceError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise InstanceError("missing 'p edge <n> <m>' header")
    return BcpInstance(n, tuple((u, v, d) for (u, v), d in weights.items()), name=name)


def read_col(path) -> BcpInstance:
    from pathlib import Path

    p = Path(path)
    return parse_col(p.read_text(), name=p.stem)


def write_col(inst: BcpInstance) -> str:
    lines = [f"c {inst.name}" if inst.name else "c bandwidth coloring instance"]
    lines.append(f"p edge {inst.n} {inst.m}")
    lines.extend(f"e {u + 1} {v + 1} {d}" for u, v, d in inst.edges)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# BMCP


@dataclass(frozen=True)
class BmcpInstance:
    """Multicoloring instance: vertex ``v`` needs ``demand[v]`` colors.

    ``dist`` maps ``(u, v)`` with ``u <= v`` to a separation; ``(v, v)`` is the
    spacing required between the colors of one vertex.
    """

    n: int
    demand: tuple[int, ...]
    dist: dict[tuple[int, int], int]
    name: str = ""

    def __post_init__(self) -> None:
        if len(self.demand) != self.n:
            raise InstanceError(f"{len(self.demand)} demands for {self.n} vertices")
        if any(w < 1 for w in self.demand):
            raise InstanceError("demands must be >= 1")
        norm: dict[tuple[int, int], int] = {}
        for (u, v), d in self.dist.items():
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InstanceError(f"distance ({u}, {v}) out of range")
            if d < 1:
                raise InstanceError(f"distance ({u}, {v}) = {d} < 1")
            key = (min(u, v), max(u, v))
            if key in norm and norm[key] != d:
                raise InstanceError(f"asymmetric distance for {key}")
            norm[key] = d
        object.__setattr__(self, "dist", norm)


def bmcp_to_bcp(b: BmcpInstance) -> tuple[BcpInstance, list[int]]:
    """Replace each vertex by a clique of ``demand`` copies.

    Returns the BCP instance and ``origin`` where ``origin[i]`` is the BMCP
    vertex that copy ``i`` came from.
    """
    origin: list[int] = []
    copies: list[list[int]] = []
    for v, w in enumerate(b.demand):
        copies.append(list(range(len(origin), len(origin) + w)))
        origin.extend([v] * w)
    edges = []
    for v, w in enumerate(b.demand):
        if w > 1:
            if (v, v) not in b.dist:
                raise InstanceError(f"vertex {v} has demand {w} but no self-distance")
            dvv = b.dist[(v, v)]
            cs = copies[v]
            edges.extend((cs[i], cs[j], dvv) for i in range(w) for j in range(i + 1, w))
    for (u, v), d in b.dist.items():
        if u == v:
            continue
        edges.extend((a, c, d) for a in copies[u] for c in copies[v])
    return BcpInstance(len(origin), tuple(edges), name=b.name), origin


def parse_bmcp(text: str, name: str = "") -> BmcpInstance:
    """Parse the BMCP dialect: ``p edge n m``, ``n <v> <w>`` demand lines,
    ``e <u> <v> <d>`` lines where ``u == v`` gives the self-distance."""
    n: int | None = None
    demand: list[int] = []
    dist: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if len(parts) != 4:
                raise InstanceError(f"line {lineno}: malformed header")
            n = _int(parts[2], lineno)
            demand = [1] * n
            continue
        if n is None:
            raise InstanceError(f"line {lineno}: data before header")
        if tag == "n" and len(parts) == 3:
            v, w = _int(parts[1], lineno), _int(parts[2], lineno)
            if not 1 <= v <= n:
                raise InstanceError(f"line {lineno}: vertex {v} outside [1, {n}]")
            demand[v - 1] = w
        elif tag == "e" and len(parts) == 4:
            u, v, d = (_int(t, lineno) for t in parts[1:])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise InstanceError(f"line {lineno}: vertex {x} outside [1, {n}]")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in dist and dist[key] != d:
                raise InstanceError(f"line {lineno}: conflicting distance for {u}-{v}")
            dist[key] = d
        else:
            raise InstanceError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if n is None:
        raise InstanceError("missing header")
    return BmcpInstance(n, tuple(demand), dist, name=name)


def random_instance(
    n: int, p: float = 0.5, dmax: int = 4, seed: int | None = None, name: str = ""
) -> BcpInstance:
    """Erdos-Renyi graph with uniform separations in ``[1, dmax]``; test helper."""
    rng = random.Random(seed)
    edges = [
        (u, v, rng.randint(1, dmax))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return BcpInstance(n, tuple(edges), name=name or f"rand-n{n}-s{seed}")
