from __future__ import annotations

from dataclasses import dataclass, field

from ..cnf import CnfFormula, VarRegistry
from ..instance import BcpInstance
from .config import EncodingConfig

Block = tuple[int, int, str]  # (start, end, "backward" | "forward" | "both")


@dataclass
class EncodedProblem:
    """CNF for "span <= k" plus what is needed to decode and restrict it.

    ``xvars[u][j]`` / ``yvars[u][j]`` hold the DIMACS ids of the assignment and
    order variables (index 0 unused); either table is empty when the
    encoding has no such family.
    """

    inst: BcpInstance
    k: int
    config: EncodingConfig
    formula: CnfFormula
    xvars: list[list[int]] = field(default_factory=list)
    yvars: list[list[int]] = field(default_factory=list)
    blocks: list[list[Block]] | None = None
    symmetry_vertex: int | None = None
    # literals pinned by the base encoding (not by symmetry breaking)
    base_pins: set[int] = field(default_factory=set)

    @property
    def registry(self) -> VarRegistry:
        return self.formula.registry

    @property
    def num_vars(self) -> int:
        return self.formula.var_count

    @property
    def num_clauses(self) -> int:
        return len(self.formula.clauses)

    def free_order_vars(self) -> int:
        """Order variables not fixed by the base unit clauses."""
        ids = {v for row in self.yvars for v in row[1:]}
        return len(ids - {abs(p) for p in self.base_pins})
