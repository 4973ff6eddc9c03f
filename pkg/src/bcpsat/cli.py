"""Command line: ``bcpsat solve`` for one instance, ``bcpsat matrix`` for the
36-configuration benchmark over a directory of ``.col`` files."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .bounds import dsatur_bound
from .cnf import format_key, to_dimacs
from .encode import ConfigError, EncodingConfig, all_configs, encode
from .instance import InstanceError, read_col
from .satcore import SolverError, Status
from .search import Iteration, solve_optimal

EXIT_OK, EXIT_ERROR, EXIT_UNPROVEN = 0, 1, 2

CSV_FIELDS = [
    "instance", "method", "width", "incremental", "symmetry",
    "span", "proven", "time_s", "vars", "clauses", "iterations", "count_basis",
]
DEFAULT_THRESHOLDS = (500, 1000, 1500, 2000, 2500)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- records


@dataclass
class RunRecord:
    instance: str
    method: str
    width: str
    incremental: str
    symmetry: bool
    span: int
    proven: bool
    time_s: float
    vars: int
    clauses: int
    iterations: list[Iteration] = field(default_factory=list)
    count_basis: str = "initial"

    def to_row(self) -> dict[str, str]:
        trace = ";".join(
            f"{it.k}:{it.status}:{it.time!r}:{it.conflicts}" for it in self.iterations
        )
        return {
            "instance": self.instance,
            "method": self.method,
            "width": self.width,
            "incremental": self.incremental,
            "symmetry": "true" if self.symmetry else "false",
            "span": str(self.span),
            "proven": "true" if self.proven else "false",
            "time_s": repr(self.time_s),
            "vars": str(self.vars),
            "clauses": str(self.clauses),
            "iterations": trace,
            "count_basis": self.count_basis,
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "RunRecord":
        iterations = []
        if row["iterations"]:
            for item in row["iterations"].split(";"):
                k, status, t, conflicts = item.split(":")
                iterations.append(Iteration(int(k), Status(status), float(t), int(conflicts)))
        return cls(
            instance=row["instance"],
            method=row["method"],
            width=row["width"],
            incremental=row["incremental"],
            symmetry=row["symmetry"] == "true",
            span=int(row["span"]),
            proven=row["proven"] == "true",
            time_s=float(row["time_s"]),
            vars=int(row["vars"]),
            clauses=int(row["clauses"]),
            iterations=iterations,
            count_basis=row["count_basis"],
        )

    def config(self, block_width: int = 8) -> EncodingConfig:
        width = None if self.width in ("", "-") else self.width
        return EncodingConfig(self.method, width, self.incremental, self.symmetry, block_width)


def write_records(records, out) -> None:
    w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(r.to_row())


def read_records(text: str) -> list[RunRecord]:
    return [RunRecord.from_row(row) for row in csv.DictReader(io.StringIO(text))]


def threshold_summary(records, thresholds=DEFAULT_THRESHOLDS) -> dict[str, list[int]]:
    """Per configuration: number of instances proven within each time threshold."""
    table: dict[str, list[int]] = {}
    for r in records:
        label = r.config().label()
        row = table.setdefault(label, [0] * len(thresholds))
        for i, t in enumerate(thresholds):
            if r.proven and r.time_s <= t:
                row[i] += 1
    return table


# ------------------------------------------------------------------ solve


def parse_width(text: str | None) -> tuple[str | None, int]:
    if text is None:
        return None, 8
    if text == "vary":
        return "vary", 8
    if text == "fixed":
        return "fixed", 8
    if text.startswith("fixed:"):
        try:
            w = int(text.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad width {text!r}") from None
        return "fixed", w
    raise UsageError(f"bad width {text!r}; expected fixed[:w] or vary")


_METHODS = {"1g": "1G", "1l": "1L", "2g": "2G", "2l": "2L", "x": "X", "xa": "Xa"}


def config_from_args(args) -> EncodingConfig:
    width, w = parse_width(args.width)
    method = _METHODS[args.method]
    if width is None and method in ("X", "Xa"):
        width = "fixed"
    try:
        return EncodingConfig(method, width, args.incremental, args.symmetry == "on", w)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def cmd_solve(args) -> int:
    config = config_from_args(args)
    inst = read_col(args.instance)
    if args.emit_cnf:
        k = args.span or dsatur_bound(inst).H
        enc = encode(inst, k, config)
        comments = [f"instance {inst.name}", f"config {config.label()}", f"span {k}"]
        comments += [f"var {vid} {format_key(key)}" for vid, key in enc.registry.items()]
        Path(args.emit_cnf).write_text(to_dimacs(enc.formula, comments))
        print(f"wrote {args.emit_cnf}: {enc.num_vars} vars, {enc.num_clauses} clauses")
        return EXIT_OK
    res = solve_optimal(inst, config, time_limit=args.timeout, backend=args.backend)
    if args.json:
        payload = {
            "instance": inst.name,
            "config": config.label(),
            "upper_bound": res.upper_bound,
            "span": res.optimal_span,
            "proven": res.proven,
            "time_s": res.total_time,
            "vars": res.num_vars,
            "clauses": res.num_clauses,
            "iterations": [[it.k, str(it.status), it.time, it.conflicts] for it in res.iterations],
            "coloring": list(res.witness.color),
        }
        print(json.dumps(payload))
    else:
        print(f"instance     {inst.name} (n={inst.n}, m={inst.m})")
        print(f"config       {config.label()}")
        print(f"upper bound  {res.upper_bound}")
        print(f"span         {res.optimal_span} ({'proven' if res.proven else 'unproven'})")
        print(f"time         {res.total_time:.3f}s over {len(res.iterations)} SAT calls")
        print(f"encoding     {res.num_vars} vars, {res.num_clauses} clauses ({res.count_basis})")
        if args.print_coloring:
            print("coloring     " + " ".join(map(str, res.witness.color)))
    return EXIT_OK if res.proven else EXIT_UNPROVEN


# ----------------------------------------------------------------- matrix


def _run_one(task) -> RunRecord:
    path, config, timeout, backend = task
    inst = read_col(path)
    res = solve_optimal(inst, config, time_limit=timeout, backend=backend)
    return RunRecord(
        instance=inst.name,
        method=config.method,
        width=config.width or "-",
        incremental=config.incremental,
        symmetry=config.symmetry,
        span=res.optimal_span,
        proven=res.proven,
        time_s=res.total_time,
        vars=res.num_vars,
        clauses=res.num_clauses,
        iterations=res.iterations,
        count_basis=res.count_basis,
    )


def run_matrix(paths, timeout=None, jobs=1, backend="builtin", block_width=8) -> list[RunRecord]:
    configs = list(all_configs(block_width))
    tasks = [(p, c, timeout, backend) for p in paths for c in configs]
    if jobs <= 1:
        records = [_run_one(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_one, tasks))
    order = {c: i for i, c in enumerate(configs)}
    records.sort(key=lambda r: (r.instance, order[r.config(block_width)]))
    return records


def cmd_matrix(args) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    good = []
    for p in sorted(root.glob("*.col")):
        try:
            read_col(p)
        except (InstanceError, OSError, UnicodeDecodeError) as exc:
            print(f"skipping {p}: {exc}", file=sys.stderr)
            continue
        good.append(p)
    records = run_matrix(good, args.timeout, args.jobs, args.backend, args.block_width)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_records(records, fh)
    else:
        write_records(records, sys.stdout)
    thresholds = tuple(args.thresholds) if args.thresholds else DEFAULT_THRESHOLDS
    table = threshold_summary(records, thresholds)
    if table:
        print("solved within (s): " + " ".join(f"{t:>6}" for t in thresholds), file=sys.stderr)
        for label, counts in table.items():
            print(f"{label:<28} " + " ".join(f"{c:>6}" for c in counts), file=sys.stderr)
    return EXIT_OK


# ------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bcpsat", description="Exact bandwidth coloring via SAT encodings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve one .col instance to optimality")
    s.add_argument("instance")
    s.add_argument("--method", choices=sorted(_METHODS), default="1g")
    s.add_argument("--width", help="fixed[:w] or vary (block methods only)")
    s.add_argument("--incremental", choices=["none", "x", "y"], default="none")
    s.add_argument("--symmetry", choices=["on", "off"], default="off")
    s.add_argument("--timeout", type=float, default=None, help="global time limit in seconds")
    s.add_argument("--backend", default="builtin", help="builtin or external:<command>")
    s.add_argument("--emit-cnf", metavar="PATH", help="write the CNF and exit")
    s.add_argument("--span", type=int, help="span bound for --emit-cnf (default: DSatur bound)")
    s.add_argument("--print-coloring", action="store_true")
    s.add_argument("--json", action="store_true", help="one JSON object on stdout")
    s.set_defaults(func=cmd_solve)

    m = sub.add_parser("matrix", help="run all 36 configurations on a directory")
    m.add_argument("directory")
    m.add_argument("--timeout", type=float, default=None, help="per (instance, config)")
    m.add_argument("--jobs", type=int, default=1)
    m.add_argument("--backend", default="builtin")
    m.add_argument("--block-width", type=int, default=8)
    m.add_argument("--out", help="CSV path (default: stdout)")
    m.add_argument("--thresholds", type=float, nargs="+", help="summary time thresholds")
    m.set_defaults(func=cmd_matrix)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bcpsat: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (InstanceError, OSError, SolverError) as exc:
        print(f"bcpsat: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
