#!/usr/bin/env python3
"""Minimal DIMACS front end for a python-sat solver, for use as
``bcpsat solve --backend "external:python3 scripts/pysat_dimacs.py {cnf}"``.

Reads a CNF from the given path (or standard input) and prints SAT
competition output: an ``s`` line, ``v`` lines, exit code 10 or 20.
"""

from __future__ import annotations

import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("cnf", nargs="?", help="DIMACS file (default: stdin)")
    ap.add_argument("--solver", default="cadical153", help="python-sat solver name")
    args = ap.parse_args()
    formula = CNF(from_file=args.cnf) if args.cnf else CNF(from_fp=sys.stdin)
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as s:
        if not s.solve():
            print("s UNSATISFIABLE")
            return 20
        model = s.get_model() or []
    print("s SATISFIABLE")
    print("v " + " ".join(map(str, model)) + " 0")
    return 10


if __name__ == "__main__":
    sys.exit(main())
