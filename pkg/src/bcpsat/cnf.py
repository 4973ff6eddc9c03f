"""Clause store with a semantic variable registry and DIMACS I/O.

Variable keys are tagged tuples so different families never collide:

    ("x", u, j)               assignment: c(u) == j
    ("y", u, j)               order variable (>= or <= semantics per encoding)
    ("R", u, a, b)            c(u) in [a, b]
    ("S", u, a, b, a2, b2)    c(u) in [a, b] minus [a2, b2]
    ("aux", label)            anything else
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator

VarKey = tuple


def X(u: int, j: int) -> VarKey:
    return ("x", u, j)


def Y(u: int, j: int) -> VarKey:
    return ("y", u, j)


def R(u: int, a: int, b: int) -> VarKey:
    return ("R", u, a, b)


def S(u: int, a: int, b: int, a2: int, b2: int) -> VarKey:
    return ("S", u, a, b, a2, b2)


def Aux(label: Hashable) -> VarKey:
    return ("aux", label)


def format_key(key: VarKey) -> str:
    tag, *rest = key
    return f"{tag}(" + ",".join(str(r) for r in rest) + ")"


class CnfError(ValueError):
    pass


class VarRegistry:
    """Bijection between variable keys and DIMACS ids ``1..len(self)``."""

    def __init__(self) -> None:
        self._ids: dict[VarKey, int] = {}
        self._keys: list[VarKey] = [None]  # 1-based

    def fresh_var(self, key: VarKey) -> int:
        if key in self._ids:
            raise CnfError(f"variable {format_key(key)} already registered")
        vid = len(self._keys)
        self._ids[key] = vid
        self._keys.append(key)
        return vid

    def lookup(self, key: VarKey) -> int | None:
        return self._ids.get(key)

    def get(self, key: VarKey) -> int:
        """Id of ``key``, allocating it on first use."""
        vid = self._ids.get(key)
        return vid if vid is not None else self.fresh_var(key)

    def reverse(self, vid: int) -> VarKey:
        if not 1 <= vid < len(self._keys):
            raise CnfError(f"unknown variable id {vid}")
        return self._keys[vid]

    def __len__(self) -> int:
        return len(self._keys) - 1

    def __contains__(self, key: VarKey) -> bool:
        return key in self._ids

    def items(self) -> Iterator[tuple[int, VarKey]]:
        for vid in range(1, len(self._keys)):
            yield vid, self._keys[vid]

    def count(self, tag: str) -> int:
        return sum(1 for k in self._ids if k[0] == tag)


class CnfFormula:
    def __init__(self, registry: VarRegistry | None = None) -> None:
        self.registry = registry if registry is not None else VarRegistry()
        self.clauses: list[list[int]] = []
        # unit-asserted literals, also present in ``clauses``
        self.pinned: set[int] = set()

    @property
    def var_count(self) -> int:
        return len(self.registry)

    def var(self, key: VarKey) -> int:
        return self.registry.get(key)

    def add_clause(self, lits: Iterable[int]) -> None:
        clause = list(lits)
        nv = self.var_count
        for lit in clause:
            if lit == 0 or abs(lit) > nv:
                raise CnfError(f"literal {lit} does not reference an allocated variable")
        self.clauses.append(clause)

    def pin(self, lit: int) -> None:
        self.add_clause([lit])
        self.pinned.add(lit)

    def __len__(self) -> int:
        return len(self.clauses)


def to_dimacs(f: CnfFormula, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p cnf {f.var_count} {len(f.clauses)}")
    out.extend(" ".join(map(str, cl)) + " 0" for cl in f.clauses)
    return "\n".join(out) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    """Read ``p cnf`` text; returns ``(var_count, clauses)``."""
    nvars = None
    nclauses = None
    clauses: list[list[int]] = []
    cur: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"bad header {line!r}")
            nvars, nclauses = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(lit)
    if cur:
        clauses.append(cur)
    if nvars is None:
        raise CnfError("missing 'p cnf' header")
    if nclauses is not None and nclauses != len(clauses):
        raise CnfError(f"header promises {nclauses} clauses, found {len(clauses)}")
    return nvars, clauses
