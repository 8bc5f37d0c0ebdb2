"""Peeling failure rate against erasure probability, for a graph's incidence
Tanner graph and its vertex-cover gadget.

    python scripts/failure_curve.py --vertices 4 --edges 4 --trials 5000
"""

import argparse
import json
import random
from dataclasses import asdict, dataclass

from stopset.decoder import mc_failure_rate
from stopset.graphs import incidence_graph, random_graph
from stopset.reduction import build_reduction
from stopset.stopping import stopping_distance


@dataclass
class CurveConfig:
    vertices: int = 4
    edges: int = 4
    seed: int = 0
    trials: int = 5000
    steps: int = 10


def main(cfg: CurveConfig):
    g = random_graph(cfg.vertices, cfg.edges, random.Random(cfg.seed), connected=True)
    targets = {"incidence": incidence_graph(g), "gadget": build_reduction(g).product}
    for name, t in targets.items():
        d = stopping_distance(t).size
        for k in range(cfg.steps + 1):
            eps = k / cfg.steps
            rep = mc_failure_rate(t, eps, cfg.trials, cfg.seed)
            print(json.dumps({"graph": name, "n_vars": t.n_vars, "stopping_distance": d, **asdict(cfg),
                              "epsilon": eps, "rate": rep.rate}))


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    for name, default in vars(CurveConfig()).items():
        p.add_argument(f"--{name}", type=int, default=default)
    main(CurveConfig(**vars(p.parse_args())))
