"""Incremental CDCL solver.

Two-watched-literal propagation (binary clauses on a separate watch list),
first-UIP learning with local minimization, VSIDS with phase saving,
geometric restarts and activity-based learnt-clause deletion. Assumptions
are decided first, one per decision level.

Internal literals: variable ``v`` is ``2*v`` (positive) and ``2*v + 1``
(negative), so ``lit ^ 1`` negates.
"""

from __future__ import annotations

import time
from typing import Iterable, Sequence

from . import SolveOutcome, SolveStats, Status

_TRUE = 1
_FALSE = -1
_UNDEF = 0


def _to_internal(lit: int) -> int:
    return 2 * lit if lit > 0 else -2 * lit + 1


class _VarOrder:
    """Binary max-heap over variables keyed by activity."""

    def __init__(self, activity: list[float]) -> None:
        self.act = activity
        self.heap: list[int] = []
        self.pos: list[int] = [-1]

    def grow(self, nvars: int) -> None:
        while len(self.pos) <= nvars:
            self.pos.append(-1)
            self.insert(len(self.pos) - 1)

    def __contains__(self, v: int) -> bool:
        return self.pos[v] >= 0

    def _up(self, i: int) -> None:
        heap, pos, act = self.heap, self.pos, self.act
        v = heap[i]
        a = act[v]
        while i > 0:
            parent = (i - 1) >> 1
            pv = heap[parent]
            if act[pv] >= a:
                break
            heap[i] = pv
            pos[pv] = i
            i = parent
        heap[i] = v
        pos[v] = i

    def _down(self, i: int) -> None:
        heap, pos, act = self.heap, self.pos, self.act
        n = len(heap)
        v = heap[i]
        a = act[v]
        while True:
            child = 2 * i + 1
            if child >= n:
                break
            if child + 1 < n and act[heap[child + 1]] > act[heap[child]]:
                child += 1
            cv = heap[child]
            if act[cv] <= a:
                break
            heap[i] = cv
            pos[cv] = i
            i = child
        heap[i] = v
        pos[v] = i

    def insert(self, v: int) -> None:
        if self.pos[v] >= 0:
            return
        self.heap.append(v)
        self.pos[v] = len(self.heap) - 1
        self._up(len(self.heap) - 1)

    def increased(self, v: int) -> None:
        i = self.pos[v]
        if i >= 0:
            self._up(i)

    def pop(self) -> int:
        heap, pos = self.heap, self.pos
        top = heap[0]
        last = heap.pop()
        pos[top] = -1
        if heap:
            heap[0] = last
            pos[last] = 0
            self._down(0)
        return top

    def __len__(self) -> int:
        return len(self.heap)

    def rebuild(self) -> None:
        self.heap.sort(key=lambda v: -self.act[v])
        for i, v in enumerate(self.heap):
            self.pos[v] = i


class CdclSolver:
    """Complete, assumption-capable CDCL engine.

    Clauses persist across ``solve`` calls until ``reset``. Search is fully
    deterministic; only the time limit reads the clock.
    """

    def __init__(
        self,
        restart_base: int = 100,
        restart_factor: float = 1.5,
        learnt_ratio: float = 4.0,
        min_learnts: int = 2000,
        var_decay: float = 0.95,
        clause_decay: float = 0.999,
        conflict_limit: int | None = None,
    ) -> None:
        self.restart_base = restart_base
        self.restart_factor = restart_factor
        self.learnt_ratio = learnt_ratio
        self.min_learnts = min_learnts
        self.var_decay = var_decay
        self.clause_decay = clause_decay
        self.conflict_limit = conflict_limit
        self.reset()

    # ------------------------------------------------------------------ setup

    def reset(self) -> None:
        self.nvars = 0
        self.val: list[int] = [_UNDEF, _UNDEF]
        self.level: list[int] = [0]
        self.reason: list[int] = [-1]
        self.activity: list[float] = [0.0]
        self.polarity: list[int] = [1]  # saved phase: internal sign bit, 1 = negative
        self.seen: list[bool] = [False]
        self.watches: list[list[int]] = [[], []]
        self.bins: list[list[tuple[int, int]]] = [[], []]
        self.clauses: list[list[int] | None] = []
        self.learnt_ids: list[int] = []
        self.clause_act: dict[int, float] = {}
        self.n_original = 0
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self._props = 0
        self.ok = True
        self.var_inc = 1.0
        self.cla_inc = 1.0
        self.order = _VarOrder(self.activity)
        self.total = SolveStats()

    def _grow(self, nvars: int) -> None:
        if nvars <= self.nvars:
            return
        extra = nvars - self.nvars
        self.val.extend([_UNDEF] * (2 * extra))
        self.level.extend([0] * extra)
        self.reason.extend([-1] * extra)
        self.activity.extend([0.0] * extra)
        self.polarity.extend([1] * extra)
        self.seen.extend([False] * extra)
        for _ in range(2 * extra):
            self.watches.append([])
            self.bins.append([])
        self.nvars = nvars
        self.order.grow(nvars)

    def new_var(self) -> int:
        self._grow(self.nvars + 1)
        return self.nvars

    def add_clauses(self, clauses: Iterable[Sequence[int]]) -> None:
        for c in clauses:
            self.add_clause(c)

    def add_clause(self, lits: Sequence[int]) -> None:
        if self.trail_lim:
            self._backtrack(0)
        if not self.ok:
            return
        top = max((abs(x) for x in lits), default=0)
        if top > self.nvars:
            self._grow(top)
        val = self.val
        clause: list[int] = []
        present: set[int] = set()
        for x in lits:
            if x == 0:
                raise ValueError("literal 0 in clause")
            p = _to_internal(x)
            if p in present:
                continue
            if p ^ 1 in present or val[p] == _TRUE:
                return
            if val[p] == _FALSE:
                continue
            present.add(p)
            clause.append(p)
        if not clause:
            self.ok = False
            return
        if len(clause) == 1:
            self._enqueue(clause[0], -1)
            if self._propagate() >= 0:
                self.ok = False
            return
        self.n_original += 1
        self._attach(clause)

    def _attach(self, clause: list[int]) -> int:
        cid = len(self.clauses)
        self.clauses.append(clause)
        if len(clause) == 2:
            a, b = clause
            self.bins[a].append((b, cid))
            self.bins[b].append((a, cid))
        else:
            self.watches[clause[0]].append(cid)
            self.watches[clause[1]].append(cid)
        return cid

    # ------------------------------------------------------------ primitives

    def _enqueue(self, p: int, reason: int) -> None:
        val = self.val
        val[p] = _TRUE
        val[p ^ 1] = _FALSE
        v = p >> 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(p)

    def _backtrack(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        stop = self.trail_lim[lvl]
        trail, val, reason, polarity, order = (
            self.trail, self.val, self.reason, self.polarity, self.order
        )
        for i in range(len(trail) - 1, stop - 1, -1):
            p = trail[i]
            v = p >> 1
            val[p] = _UNDEF
            val[p ^ 1] = _UNDEF
            reason[v] = -1
            polarity[v] = p & 1
            if order.pos[v] < 0:
                order.insert(v)
        del trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = stop

    def _propagate(self) -> int:
        """Unit propagation; returns a conflicting clause id or -1."""
        trail = self.trail
        val = self.val
        clauses = self.clauses
        watches = self.watches
        bins = self.bins
        level = self.level
        reason = self.reason
        lvl = len(self.trail_lim)
        qhead = self.qhead
        props = 0
        confl = -1
        while qhead < len(trail):
            p = trail[qhead]
            qhead += 1
            props += 1
            f = p ^ 1
            for other, cid in bins[f]:
                vo = val[other]
                if vo == _FALSE:
                    confl = cid
                    break
                if vo == _UNDEF:
                    val[other] = _TRUE
                    val[other ^ 1] = _FALSE
                    v = other >> 1
                    level[v] = lvl
                    reason[v] = cid
                    trail.append(other)
            if confl >= 0:
                break
            ws = watches[f]
            i = j = 0
            n = len(ws)
            while i < n:
                cid = ws[i]
                i += 1
                c = clauses[cid]
                if c is None:
                    continue
                if c[0] == f:
                    c[0] = c[1]
                    c[1] = f
                first = c[0]
                if val[first] == _TRUE:
                    ws[j] = cid
                    j += 1
                    continue
                for k in range(2, len(c)):
                    q = c[k]
                    if val[q] != _FALSE:
                        c[1] = q
                        c[k] = f
                        watches[q].append(cid)
                        break
                else:
                    ws[j] = cid
                    j += 1
                    if val[first] == _FALSE:
                        confl = cid
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        break
                    val[first] = _TRUE
                    val[first ^ 1] = _FALSE
                    v = first >> 1
                    level[v] = lvl
                    reason[v] = cid
                    trail.append(first)
            del ws[j:]
            if confl >= 0:
                break
        self.qhead = qhead if confl < 0 else len(trail)
        self._props += props
        return confl

    def _bump_var(self, v: int) -> None:
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for i in range(1, self.nvars + 1):
                act[i] *= 1e-100
            self.var_inc *= 1e-100
        self.order.increased(v)

    def _bump_clause(self, cid: int) -> None:
        a = self.clause_act.get(cid)
        if a is None:
            return
        a += self.cla_inc
        self.clause_act[cid] = a
        if a > 1e20:
            for k in self.clause_act:
                self.clause_act[k] *= 1e-20
            self.cla_inc *= 1e-20

    def _analyze(self, confl: int) -> tuple[list[int], int]:
        seen, level, reason, trail, clauses = (
            self.seen, self.level, self.reason, self.trail, self.clauses
        )
        cur = len(self.trail_lim)
        learnt = [0]
        path = 0
        pvar = -1
        idx = len(trail) - 1
        cid = confl
        while True:
            self._bump_clause(cid)
            for q in clauses[cid]:
                v = q >> 1
                if v == pvar or seen[v] or level[v] == 0:
                    continue
                seen[v] = True
                self._bump_var(v)
                if level[v] >= cur:
                    path += 1
                else:
                    learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            pvar = p >> 1
            seen[pvar] = False
            path -= 1
            if path == 0:
                break
            cid = reason[pvar]
        learnt[0] = p ^ 1

        # drop literals implied by the rest of the clause
        keep = [learnt[0]]
        for q in learnt[1:]:
            r = reason[q >> 1]
            if r < 0:
                keep.append(q)
                continue
            for t in clauses[r]:
                tv = t >> 1
                if tv != q >> 1 and not seen[tv] and level[tv] > 0:
                    keep.append(q)
                    break
        for q in learnt[1:]:
            seen[q >> 1] = False

        if len(keep) == 1:
            return keep, 0
        best = 1
        for i in range(2, len(keep)):
            if level[keep[i] >> 1] > level[keep[best] >> 1]:
                best = i
        keep[1], keep[best] = keep[best], keep[1]
        return keep, level[keep[1] >> 1]

    def _reduce_db(self) -> None:
        locked = set()
        for p in self.trail:
            r = self.reason[p >> 1]
            if r >= 0:
                locked.add(r)
        act = self.clause_act
        candidates = [
            cid for cid in self.learnt_ids
            if cid not in locked and len(self.clauses[cid]) > 2
        ]
        candidates.sort(key=lambda c: act[c])
        drop = set(candidates[: len(candidates) // 2])
        for cid in drop:
            self.clauses[cid] = None
            del act[cid]
        self.learnt_ids = [c for c in self.learnt_ids if c not in drop]

    # ----------------------------------------------------------------- solve

    def solve(
        self, assumptions: Sequence[int] = (), time_limit: float | None = None
    ) -> SolveOutcome:
        start = time.perf_counter()
        deadline = None if time_limit is None else start + time_limit
        self._props = 0
        stats = SolveStats()
        status = self._search([_to_internal(a) for a in assumptions], deadline, stats)
        stats.propagations = self._props
        stats.learnts = len(self.learnt_ids)
        stats.time = time.perf_counter() - start
        model = None
        if status is Status.SAT:
            val = self.val
            model = [False] + [val[2 * v] == _TRUE for v in range(1, self.nvars + 1)]
        self._backtrack(0)
        for name in ("conflicts", "decisions", "propagations", "restarts"):
            setattr(self.total, name, getattr(self.total, name) + getattr(stats, name))
        self.total.time += stats.time
        return SolveOutcome(status, model, stats)

    def _search(self, assumptions: list[int], deadline: float | None, stats: SolveStats) -> Status:
        if not self.ok:
            return Status.UNSAT
        for a in assumptions:
            if (a >> 1) > self.nvars:
                self._grow(a >> 1)
        if self._propagate() >= 0:
            self.ok = False
            return Status.UNSAT
        val = self.val
        order = self.order
        polarity = self.polarity
        trail_lim = self.trail_lim
        restart_limit = float(self.restart_base)
        since_restart = 0
        max_learnts = max(self.min_learnts, int(self.learnt_ratio * self.n_original))
        n_assump = len(assumptions)
        conflict_cap = self.conflict_limit

        while True:
            confl = self._propagate()
            if confl >= 0:
                stats.conflicts += 1
                since_restart += 1
                if not trail_lim:
                    self.ok = False
                    return Status.UNSAT
                learnt, bt = self._analyze(confl)
                self._backtrack(bt)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], -1)
                else:
                    cid = self._attach(learnt)
                    self.learnt_ids.append(cid)
                    self.clause_act[cid] = self.cla_inc
                    self._enqueue(learnt[0], cid)
                self.var_inc /= self.var_decay
                self.cla_inc /= self.clause_decay
                if stats.conflicts & 63 == 0:
                    if deadline is not None and time.perf_counter() > deadline:
                        return Status.UNKNOWN
                    if conflict_cap is not None and stats.conflicts >= conflict_cap:
                        return Status.UNKNOWN
                continue

            if since_restart >= restart_limit:
                stats.restarts += 1
                since_restart = 0
                restart_limit *= self.restart_factor
                self._backtrack(0)
                if len(self.learnt_ids) >= max_learnts:
                    self._reduce_db()
                    max_learnts = int(max_learnts * 1.1)
                continue

            nxt = -1
            while len(trail_lim) < n_assump:
                a = assumptions[len(trail_lim)]
                if val[a] == _TRUE:
                    trail_lim.append(len(self.trail))
                elif val[a] == _FALSE:
                    return Status.UNSAT
                else:
                    nxt = a
                    break
            if nxt < 0:
                while len(order):
                    v = order.pop()
                    if val[2 * v] == _UNDEF:
                        nxt = 2 * v + polarity[v]
                        break
                else:
                    return Status.SAT
                stats.decisions += 1
                if deadline is not None and stats.decisions & 1023 == 0:
                    if time.perf_counter() > deadline:
                        return Status.UNKNOWN
            trail_lim.append(len(self.trail))
            self._enqueue(nxt, -1)
