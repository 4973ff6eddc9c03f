"""Regenerate the GEOM-style desk corpus in ``corpus/``.

Points fall uniformly in the unit square; points closer than ``radius`` are
joined, and closer pairs need a larger separation (1..dmax). The density
targets roughly 2n edges, like the sparse GEOMn family.
"""

import argparse
import math
import random
from pathlib import Path

from bcpsat.instance import BcpInstance, write_col


def geometric(n: int, seed: int, dmax: int = 10, mean_degree: float = 4.0) -> BcpInstance:
    rng = random.Random(seed)
    pts = [(rng.random(), rng.random()) for _ in range(n)]
    radius = math.sqrt(mean_degree / (math.pi * n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            dist = math.dist(pts[u], pts[v])
            if dist < radius:
                edges.append((u, v, 1 + int((dmax - 1) * (1 - dist / radius) + 0.5)))
    return BcpInstance(n, tuple(edges), name=f"geoms{n}-{seed}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="corpus")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(exist_ok=True)
    # (n, seed, dmax, mean degree, suffix)
    specs = [
        (8, 1, 10, 4.0, ""),
        (10, 2, 10, 4.0, ""),
        (10, 3, 4, 6.0, "b"),
        (20, 2, 10, 5.0, ""),
        (20, 3, 3, 8.0, "b"),
        (30, 2, 10, 7.0, ""),
        (40, 2, 10, 7.5, ""),
    ]
    for n, seed, dmax, deg, suffix in specs:
        inst = geometric(n, seed, dmax, deg)
        inst = BcpInstance(inst.n, inst.edges, name=f"geoms{n}{suffix}-{seed}")
        (out / f"{inst.name}.col").write_text(write_col(inst))
        print(inst.name, inst.n, inst.m)


if __name__ == "__main__":
    main()
