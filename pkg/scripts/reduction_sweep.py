"""Sweep random connected graphs through the gadget and print one CSV row each.

    python scripts/reduction_sweep.py --count 50 --max-n 10 --max-m 20
"""

import argparse
import csv
import random
import sys
import time
from dataclasses import dataclass

from stopset.graphs import random_graph
from stopset.oracles import min_vertex_cover
from stopset.reduction import build_reduction
from stopset.stopping import stopping_distance


@dataclass
class SweepConfig:
    count: int = 50
    min_n: int = 2
    max_n: int = 10
    max_m: int = 20
    seed: int = 0


def main(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    out = csv.writer(sys.stdout)
    out.writerow(["n", "m", "vars", "checks", "tau", "distance", "expected", "nodes", "seconds", "ok"])
    for _ in range(cfg.count):
        n = rng.randint(cfg.min_n, cfg.max_n)
        m = rng.randint(n - 1, min(cfg.max_m, n * (n - 1) // 2))
        g = random_graph(n, m, rng, connected=True)
        inst = build_reduction(g)
        tau = min_vertex_cover(g).size
        t0 = time.perf_counter()
        d = stopping_distance(inst.product)
        dt = time.perf_counter() - t0
        expected = tau * (m + 1) + m
        out.writerow([n, m, inst.product.n_vars, inst.product.n_checks, tau, d.size, expected,
                      d.nodes_explored, f"{dt:.4f}", d.size == expected])


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    for name, default in vars(SweepConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    main(SweepConfig(**vars(p.parse_args())))
