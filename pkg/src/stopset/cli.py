"""Command line entry point.

Every subcommand writes exactly one JSON document to stdout (``gen`` writes
the graph file itself when no ``--out`` is given). Diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import graphs
from .decoder import mc_failure_rate, peel
from .graphs import FormatError, Graph, TannerGraph
from .oracles import has_vertex_cover_of_size, min_vertex_cover
from .reduction import ReductionError, build_reduction, verify_corollaries
from .stopping import VarSet, has_stopping_set_of_size, is_stopping_set, neighborhood, stopping_distance


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Path | None = None
    out: Path | None = None
    fmt: str = "alist"
    out_fmt: str = "alist"
    budget: int | None = None
    exact_size: int | None = None
    size: int | None = None
    varset: str | None = None
    canonical: bool = False
    max_nodes: int | None = None
    epsilon: float | None = None
    trials: int = 10_000
    seed: int = 0
    shards: int = 1
    workers: int = 1
    vertices: int | None = None
    edges: int | None = None
    connected: bool = False

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        fields = {k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__}
        for k in ("input", "out"):
            if fields.get(k) is not None:
                fields[k] = Path(fields[k])
        cfg = cls(**fields)
        cfg.validate()
        return cfg

    def validate(self):
        if self.workers < 1:
            raise InputError("--workers must be at least 1")
        if self.budget is not None and self.budget < 0:
            raise InputError("--budget must be non-negative")
        if self.max_nodes is not None and self.max_nodes < 1:
            raise InputError("--max-nodes must be positive")
        if self.epsilon is not None and not 0.0 <= self.epsilon <= 1.0:
            raise InputError("--epsilon must lie in [0, 1]")
        if self.command == "mc" and (self.trials < 1 or self.shards < 1):
            raise InputError("--trials and --shards must be at least 1")
        if self.command == "gen" and (self.vertices is None or self.vertices < 0 or self.edges is None or self.edges < 0):
            raise InputError("--vertices and --edges must be non-negative")
        if self.input is not None and not self.input.is_file():
            raise InputError(f"no such file: {self.input}")


def _read_graph(path: Path) -> Graph:
    return graphs.parse_graph(path.read_text())


def _read_tanner(path: Path, fmt: str) -> TannerGraph:
    text = path.read_text()
    h = graphs.parse_alist(text) if fmt == "alist" else graphs.parse_dense(text)
    return graphs.tanner_from_matrix(h)


def _emit_matrix(t: TannerGraph, fmt: str) -> str:
    h = graphs.matrix_from_tanner(t)
    return graphs.emit_alist(h) if fmt == "alist" else graphs.emit_dense(h)


def _varset(text: str | None, t: TannerGraph) -> VarSet:
    try:
        return VarSet.parse(text or "", t.n_vars)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_gen(cfg: RunConfig) -> tuple[dict | str, int]:
    rng = random.Random(cfg.seed)
    try:
        g = graphs.random_graph(cfg.vertices, cfg.edges, rng, connected=cfg.connected)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    method = "spanning-tree+uniform" if cfg.connected else "uniform"
    text = graphs.emit_graph(g, [f"gen n={g.n} m={g.m} seed={cfg.seed} method={method}"])
    if cfg.out is None:
        return text, 0
    cfg.out.write_text(text)
    return {"out": str(cfg.out), "n": g.n, "m": g.m, "connected": graphs.is_connected(g), "method": method}, 0


def cmd_incidence(cfg: RunConfig):
    t = graphs.incidence_graph(_read_graph(cfg.input))
    text = _emit_matrix(t, cfg.out_fmt)
    doc = {"n_vars": t.n_vars, "n_checks": t.n_checks, "n_edges": t.n_edges, "format": cfg.out_fmt}
    if cfg.out is None:
        doc["matrix"] = text
    else:
        cfg.out.write_text(text)
        doc["out"] = str(cfg.out)
    return doc, 0


def cmd_reduce(cfg: RunConfig):
    inst = build_reduction(_read_graph(cfg.input))
    t = inst.product
    alist = _emit_matrix(t, "alist")
    sidecar = inst.sidecar()
    doc = {"n": inst.n, "m": inst.m, "n_vars": t.n_vars, "n_checks": t.n_checks, "n_edges": t.n_edges}
    if cfg.out is None:
        doc["alist"] = alist
        doc["sidecar"] = sidecar
    else:
        side_path = cfg.out.with_name(cfg.out.name + ".labels.json")
        cfg.out.write_text(alist)
        side_path.write_text(json.dumps(sidecar, indent=1) + "\n")
        doc["out"] = str(cfg.out)
        doc["labels"] = str(side_path)
    return doc, 0


def cmd_distance(cfg: RunConfig):
    t = _read_tanner(cfg.input, cfg.fmt)
    if cfg.exact_size is not None:
        if not 0 <= cfg.exact_size <= t.n_vars:
            raise InputError(f"--exact-size must lie in [0, {t.n_vars}]")
        out = has_stopping_set_of_size(t, cfg.exact_size, canonical=cfg.canonical, max_nodes=cfg.max_nodes)
    else:
        out = stopping_distance(t, budget=cfg.budget, canonical=cfg.canonical, max_nodes=cfg.max_nodes)
    return out.to_dict(), 0


def cmd_check_ss(cfg: RunConfig):
    t = _read_tanner(cfg.input, cfg.fmt)
    s = _varset(cfg.varset, t)
    nbrs = sorted(neighborhood(t, s))
    return {"set": s.to_text(), "size": len(s), "stopping_set": is_stopping_set(t, s), "neighborhood": nbrs}, 0


def cmd_vc(cfg: RunConfig):
    g = _read_graph(cfg.input)
    if cfg.size is not None:
        if not 0 <= cfg.size <= g.n:
            raise InputError(f"--size must lie in [0, {g.n}]")
        return has_vertex_cover_of_size(g, cfg.size).to_dict(), 0
    return min_vertex_cover(g, canonical=cfg.canonical).to_dict(), 0


def cmd_peel(cfg: RunConfig):
    t = _read_tanner(cfg.input, cfg.fmt)
    return peel(t, _varset(cfg.varset, t)).to_dict(), 0


def cmd_mc(cfg: RunConfig):
    t = _read_tanner(cfg.input, cfg.fmt)
    rep = mc_failure_rate(t, cfg.epsilon, cfg.trials, cfg.seed, shards=cfg.shards, workers=cfg.workers)
    return rep.to_dict(), 0


def cmd_verify(cfg: RunConfig):
    rep = verify_corollaries(_read_graph(cfg.input), workers=cfg.workers)
    return rep.to_dict(), 0 if rep.passed else 1


COMMANDS = {
    "gen": cmd_gen,
    "incidence": cmd_incidence,
    "reduce": cmd_reduce,
    "distance": cmd_distance,
    "check-ss": cmd_check_ss,
    "vc": cmd_vc,
    "peel": cmd_peel,
    "mc": cmd_mc,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="worker processes (1 = fully serial)")

    matrix = argparse.ArgumentParser(add_help=False)
    matrix.add_argument("input", help="parity-check matrix file")
    matrix.add_argument("--format", dest="fmt", choices=("alist", "dense"), default="alist",
                        help="input matrix format (default: alist)")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", help="edge-list graph file")

    p = argparse.ArgumentParser(prog="stopset", description="Stopping-set analysis of Tanner graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="generate a seeded random graph")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--edges", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--connected", action="store_true", help="draw a spanning tree first")
    s.add_argument("--out", help="write the graph here instead of stdout")

    s = sub.add_parser("incidence", parents=[common, graph_in], help="vertex-edge incidence Tanner graph")
    s.add_argument("--out-format", dest="out_fmt", choices=("alist", "dense"), default="alist")
    s.add_argument("--out", help="write the matrix here instead of embedding it in the JSON")

    s = sub.add_parser("reduce", parents=[common, graph_in], help="build the vertex-cover gadget graph")
    s.add_argument("--out", help="alist output path; labels go to <out>.labels.json")

    s = sub.add_parser("distance", parents=[common, matrix], help="exact stopping distance")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--budget", type=int, help="only look for stopping sets up to this size")
    grp.add_argument("--exact-size", type=int, help="decide existence of a stopping set of exactly this size")
    s.add_argument("--canonical", action="store_true", help="return the lexicographically smallest witness")
    s.add_argument("--max-nodes", type=int, help="cap on search nodes (result may be non-exhaustive)")

    s = sub.add_parser("check-ss", parents=[common, matrix], help="is the given set a stopping set")
    s.add_argument("--set", dest="varset", required=True, help="comma-separated variable indices")

    s = sub.add_parser("vc", parents=[common, graph_in], help="minimum (or exact-size) vertex cover")
    s.add_argument("--size", type=int, help="decide existence of a cover of exactly this size")
    s.add_argument("--canonical", action="store_true")

    s = sub.add_parser("peel", parents=[common, matrix], help="peel an erasure pattern")
    s.add_argument("--erased", dest="varset", required=True, help="comma-separated erased positions")

    s = sub.add_parser("mc", parents=[common, matrix], help="Monte Carlo decoding failure rate")
    s.add_argument("--epsilon", type=float, required=True)
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--shards", type=int, default=1)

    sub.add_parser("verify", parents=[common, graph_in], help="check the reduction on a graph")
    return p


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        doc, code = COMMANDS[cfg.command](cfg)
    except (InputError, FormatError, ReductionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(doc, str):
        sys.stdout.write(doc)
    else:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
