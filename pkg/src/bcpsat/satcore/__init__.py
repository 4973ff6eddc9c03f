"""SAT backends: the built-in CDCL engine and an external-process adapter."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Protocol, Sequence


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"

    def __str__(self) -> str:
        return self.value


@dataclass
class SolveStats:
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    learnts: int = 0
    time: float = 0.0


@dataclass
class SolveOutcome:
    """Result of one ``solve`` call.

    ``model[v]`` is the value of DIMACS variable ``v``; index 0 is unused.
    """

    status: Status
    model: list[bool] | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    def __post_init__(self) -> None:
        if (self.model is not None) != (self.status is Status.SAT):
            raise ValueError("model must be present exactly when status is SAT")

    def value(self, lit: int) -> bool:
        assert self.model is not None
        v = self.model[abs(lit)]
        return v if lit > 0 else not v


class SatBackend(Protocol):
    def add_clause(self, lits: Sequence[int]) -> None: ...

    def add_clauses(self, clauses: Iterable[Sequence[int]]) -> None: ...

    def solve(
        self, assumptions: Sequence[int] = (), time_limit: float | None = None
    ) -> SolveOutcome: ...

    def reset(self) -> None: ...


class SolverError(RuntimeError):
    """Backend failed (launch error, protocol violation)."""


from .cdcl import CdclSolver  # noqa: E402
from .external import ExternalSolver  # noqa: E402


def builtin_cdcl(**options) -> CdclSolver:
    return CdclSolver(**options)


def external_backend(command: str, **options) -> ExternalSolver:
    return ExternalSolver(command, **options)


def make_backend(spec: str = "builtin") -> SatBackend:
    """``"builtin"`` or ``"external:<command template>"``."""
    if spec == "builtin":
        return CdclSolver()
    if spec.startswith("external:"):
        return ExternalSolver(spec[len("external:"):])
    raise ValueError(f"unknown backend {spec!r}")


__all__ = [
    "Status",
    "SolveStats",
    "SolveOutcome",
    "SatBackend",
    "SolverError",
    "CdclSolver",
    "ExternalSolver",
    "builtin_cdcl",
    "external_backend",
    "make_backend",
]
