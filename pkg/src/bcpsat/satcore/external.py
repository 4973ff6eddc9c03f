"""Adapter for DIMACS solvers run as a subprocess (CaDiCaL, Kissat, MiniSat...).

Not incremental: each ``solve`` ships the whole formula, with assumptions
appended as unit clauses.
"""

from __future__ import annotations

import os
import shlex
import subprocess
import tempfile
import time
from typing import Iterable, Sequence

from . import SolveOutcome, SolveStats, SolverError, Status


def parse_solver_output(text: str, nvars: int, returncode: int | None = None) -> SolveOutcome:
    """Interpret SAT-competition style output (``s`` and ``v`` lines)."""
    status = None
    values: dict[int, bool] = {}
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "s":
            word = " ".join(parts[1:])
            if word == "SATISFIABLE":
                status = Status.SAT
            elif word == "UNSATISFIABLE":
                status = Status.UNSAT
            elif word == "UNKNOWN":
                status = Status.UNKNOWN
            else:
                raise SolverError(f"unrecognized status line {line.strip()!r}")
        elif parts[0] == "v":
            for tok in parts[1:]:
                lit = int(tok)
                if lit:
                    values[abs(lit)] = lit > 0
    if status is None:
        if returncode == 10:
            status = Status.SAT
        elif returncode == 20:
            status = Status.UNSAT
        else:
            raise SolverError("solver output has no status line")
    if status is not Status.SAT:
        return SolveOutcome(status)
    model = [False] + [values.get(v, False) for v in range(1, nvars + 1)]
    return SolveOutcome(Status.SAT, model)


class ExternalSolver:
    """Run ``command`` per solve. ``{cnf}`` in the template is replaced with a
    temporary file path; without it the formula goes to standard input."""

    def __init__(self, command: str) -> None:
        self.command = command
        self.clauses: list[list[int]] = []
        self.nvars = 0

    def add_clause(self, lits: Sequence[int]) -> None:
        c = [int(x) for x in lits]
        if c:
            self.nvars = max(self.nvars, max(abs(x) for x in c))
        self.clauses.append(c)

    def add_clauses(self, clauses: Iterable[Sequence[int]]) -> None:
        for c in clauses:
            self.add_clause(c)

    def reset(self) -> None:
        # stateless between calls; clauses are kept, as with the built-in engine
        pass

    def _dimacs(self, assumptions: Sequence[int]) -> str:
        nvars = max([self.nvars] + [abs(a) for a in assumptions])
        rows = [f"p cnf {nvars} {len(self.clauses) + len(assumptions)}"]
        rows.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        rows.extend(f"{a} 0" for a in assumptions)
        return "\n".join(rows) + "\n"

    def solve(
        self, assumptions: Sequence[int] = (), time_limit: float | None = None
    ) -> SolveOutcome:
        text = self._dimacs(assumptions)
        nvars = max([self.nvars] + [abs(a) for a in assumptions])
        start = time.perf_counter()
        path = None
        try:
            if "{cnf}" in self.command:
                fd, path = tempfile.mkstemp(suffix=".cnf")
                with os.fdopen(fd, "w") as fh:
                    fh.write(text)
                argv = shlex.split(self.command.replace("{cnf}", shlex.quote(path)))
                stdin = None
            else:
                argv = shlex.split(self.command)
                stdin = text
            try:
                proc = subprocess.run(
                    argv, input=stdin, capture_output=True, text=True, timeout=time_limit
                )
            except subprocess.TimeoutExpired:
                return SolveOutcome(Status.UNKNOWN, stats=SolveStats(time=time.perf_counter() - start))
            except OSError as exc:
                raise SolverError(f"cannot launch {argv[0]!r}: {exc}") from exc
        finally:
            if path is not None:
                os.unlink(path)
        out = parse_solver_output(proc.stdout, nvars, proc.returncode)
        out.stats.time = time.perf_counter() - start
        return out
