"""Vertex cover to stopping set reduction.

From a connected graph G with n vertices and m >= 1 edges this builds a
Tanner graph whose stopping sets of size below ``n(m+1)`` are exactly the
images of vertex covers: a cover of size t maps to a stopping set of size
``t(m+1) + m``.

Layout of the product graph (all indices are layer-major):

variables
    ``L0`` one variable per edge, then ``L1 .. L(m+1)``, each a copy of V.
checks
    ``R0`` a chain ``z_1 .. z_(m-1)`` tying the edge variables together,
    ``R1`` one check per edge, then ``R2 .. R(m+1)``, each a copy of V.

Edges: ``u@Li -- u@Ri`` for ``2 <= i <= m+1``; ``u@Li -- u@R(i+1)`` for
``1 <= i <= m``; edge check ``(u,v)@R1`` to ``u@L1`` and ``v@L1``; edge
variable ``e@L0`` to ``e@R1``; ``e_i@L0`` to ``z_i`` and ``e_(i+1)@L0`` to
``z_i``. Edge ``e_i`` is the i-th edge in canonical order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph, TannerGraph, emit_graph, is_connected
from .oracles import has_vertex_cover_of_size, is_vertex_cover, min_vertex_cover, uncovered_edge
from .stopping import VarSet, as_varset, has_stopping_set_of_size, is_stopping_set, stopping_distance


class ReductionError(ValueError):
    pass


class ReductionInvariantError(AssertionError):
    """A lemma of the construction failed on a concrete instance (a bug)."""


@dataclass(frozen=True)
class LayerLabel:
    side: str  # "left" | "right"
    layer: int
    kind: str  # "vertex" | "edge" | "chain"
    tag: int | tuple[int, int]

    def to_dict(self) -> dict:
        tag = list(self.tag) if isinstance(self.tag, tuple) else self.tag
        return {"side": self.side, "layer": self.layer, "kind": self.kind, "tag": tag}

    def __str__(self):
        name = "L" if self.side == "left" else "R"
        tag = f"{self.tag[0]}-{self.tag[1]}" if isinstance(self.tag, tuple) else self.tag
        prefix = "z" if self.kind == "chain" else ""
        return f"{prefix}{tag}@{name}{self.layer}"


@dataclass(frozen=True)
class ReductionInstance:
    source: Graph
    product: TannerGraph
    var_labels: tuple[LayerLabel, ...]
    check_labels: tuple[LayerLabel, ...]
    var_index: dict[LayerLabel, int] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def m(self) -> int:
        return self.source.m

    def var(self, vertex: int, layer: int) -> int:
        """Index of vertex copy ``u@L<layer>``, ``1 <= layer <= m+1``."""
        if not 1 <= layer <= self.m + 1:
            raise ValueError(f"vertex layer {layer} outside [1, {self.m + 1}]")
        return self.m + (layer - 1) * self.n + vertex

    def edge_var(self, k: int) -> int:
        """Index of the k-th (0-based, canonical order) edge variable in L0."""
        return k

    def layer_vars(self, layer: int) -> range:
        if layer == 0:
            return range(self.m)
        start = self.var(0, layer)
        return range(start, start + self.n)

    def sidecar(self) -> dict:
        labels = [{"index": i, **lab.to_dict()} for i, lab in enumerate(self.var_labels)]
        labels += [{"index": j, **lab.to_dict()} for j, lab in enumerate(self.check_labels)]
        return {"n": self.n, "m": self.m, "labels": labels, "size_map": "t*(m+1)+m"}


def build_reduction(g: Graph) -> ReductionInstance:
    n, m = g.n, g.m
    if m == 0:
        raise ReductionError("reduction requires at least one edge")
    if not is_connected(g):
        raise ReductionError("reduction requires connected input")

    var_labels = [LayerLabel("left", 0, "edge", e) for e in g.edges]
    for i in range(1, m + 2):
        var_labels += [LayerLabel("left", i, "vertex", u) for u in range(n)]
    check_labels = [LayerLabel("right", 0, "chain", i) for i in range(1, m)]
    check_labels += [LayerLabel("right", 1, "edge", e) for e in g.edges]
    for j in range(2, m + 2):
        check_labels += [LayerLabel("right", j, "vertex", u) for u in range(n)]

    def lvar(u: int, i: int) -> int:
        return m + (i - 1) * n + u

    def rvertex(u: int, j: int) -> int:
        return (m - 1) + m + (j - 2) * n + u

    def redge(k: int) -> int:
        return (m - 1) + k

    adj: list[list[int]] = [[] for _ in check_labels]
    for i in range(2, m + 2):
        for u in range(n):
            adj[rvertex(u, i)].append(lvar(u, i))
    for i in range(1, m + 1):
        for u in range(n):
            adj[rvertex(u, i + 1)].append(lvar(u, i))
    for k, (u, v) in enumerate(g.edges):
        adj[redge(k)] += [lvar(u, 1), lvar(v, 1)]
        adj[redge(k)].append(k)
    for i in range(1, m):
        # z_i is check i-1; e_i is edge variable i-1
        adj[i - 1] += [i - 1, i]

    product = TannerGraph(len(var_labels), tuple(tuple(a) for a in adj))
    inst = ReductionInstance(
        g, product, tuple(var_labels), tuple(check_labels), {lab: i for i, lab in enumerate(var_labels)}
    )
    _check_sizes(inst)
    return inst


def expected_sizes(n: int, m: int) -> tuple[int, int, int]:
    """(variables, checks, Tanner edges) of the product for an (n, m) graph."""
    return n * (m + 1) + m, n * m + 2 * m - 1, 2 * n * m + 5 * m - 2


def _check_sizes(inst: ReductionInstance):
    got = (inst.product.n_vars, inst.product.n_checks, inst.product.n_edges)
    want = expected_sizes(inst.n, inst.m)
    if got != want:
        raise ReductionInvariantError(f"product sizes {got}, expected {want}")
    if any(not a for a in inst.product.var_adj):
        raise ReductionInvariantError("product has an isolated variable")


def target_size(t: int, inst: ReductionInstance) -> int:
    if not 1 <= t <= inst.n - 1:
        raise ValueError(f"cover size {t} outside [1, {inst.n - 1}]")
    return t * (inst.m + 1) + inst.m


def cover_to_stopping_set(inst: ReductionInstance, cover: Iterable[int]) -> VarSet:
    cover = sorted(set(cover))
    bad = uncovered_edge(inst.source, cover) if all(0 <= u < inst.n for u in cover) else None
    if not is_vertex_cover(inst.source, cover):
        raise ReductionError(f"not a vertex cover: edge {bad} uncovered")
    size = target_size(len(cover), inst)
    members = list(inst.layer_vars(0))
    members += [inst.var(u, i) for u in cover for i in range(1, inst.m + 2)]
    s = VarSet.of(inst.product.n_vars, members)
    if len(s) != size or not is_stopping_set(inst.product, s):
        raise ReductionInvariantError(f"image of cover {cover} is not a stopping set of size {size}")
    return s


def stopping_set_to_cover(inst: ReductionInstance, s: VarSet | Iterable[int]) -> frozenset[int]:
    """Recover the vertex cover encoded by a small stopping set.

    Both the precondition (``s`` is a stopping set with
    ``0 < |s| < n(m+1)``) and the conclusion (a cover of size t with
    ``|s| = t(m+1)+m``) are checked at runtime.
    """
    s = as_varset(inst.product, s)
    if not is_stopping_set(inst.product, s):
        raise ReductionError("not a stopping set of the product graph")
    limit = inst.n * (inst.m + 1)
    if not 0 < len(s) < limit:
        raise ReductionError(f"stopping set size {len(s)} outside (0, {limit})")
    cover = frozenset(
        u for u in range(inst.n) if any(inst.var(u, i) in s for i in range(1, inst.m + 2))
    )
    t = len(cover)
    if not is_vertex_cover(inst.source, cover):
        raise ReductionInvariantError(f"extracted set {sorted(cover)} is not a vertex cover")
    if not 1 <= t <= inst.n - 1 or len(s) != t * (inst.m + 1) + inst.m:
        raise ReductionInvariantError(f"stopping set of size {len(s)} does not match cover size {t}")
    return cover


@dataclass(frozen=True)
class StructureReport:
    column_consistent: bool
    l0_all_or_nothing: bool
    l0_included: bool
    layer_counts: tuple[int, ...]

    @property
    def equal_layer_counts(self) -> bool:
        return len(set(self.layer_counts)) == 1

    @property
    def ok(self) -> bool:
        return self.column_consistent and self.l0_all_or_nothing and self.equal_layer_counts


def check_structure(inst: ReductionInstance, s: VarSet | Iterable[int]) -> StructureReport:
    """Layer structure forced on any stopping set of the product graph."""
    s = as_varset(inst.product, s)
    if not is_stopping_set(inst.product, s):
        raise ReductionError("not a stopping set of the product graph")
    layers = range(1, inst.m + 2)
    column_ok = all(
        len({inst.var(u, i) in s for i in layers}) == 1 for u in range(inst.n)
    )
    in_l0 = sum(1 for v in inst.layer_vars(0) if v in s)
    counts = tuple(sum(1 for v in inst.layer_vars(i) if v in s) for i in layers)
    return StructureReport(column_ok, in_l0 in (0, inst.m), in_l0 == inst.m, counts)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerificationRow:
    t: int
    cover_exists: bool
    stopping_set_exists: bool

    @property
    def equivalent(self) -> bool:
        return self.cover_exists == self.stopping_set_exists


@dataclass(frozen=True)
class VerificationReport:
    source: Graph
    tau: int
    distance: int | None
    expected_distance: int
    rows: tuple[VerificationRow, ...]

    @property
    def passed(self) -> bool:
        return self.distance == self.expected_distance and all(r.equivalent for r in self.rows)

    def to_dict(self) -> dict:
        out = {
            "tau": self.tau,
            "distance": self.distance,
            "expected_distance": self.expected_distance,
            "rows": [
                {
                    "t": r.t,
                    "cover_exists": r.cover_exists,
                    "stopping_set_exists": r.stopping_set_exists,
                    "equivalent": r.equivalent,
                }
                for r in self.rows
            ],
            "verdict": "PASS" if self.passed else "FAIL",
        }
        if not self.passed:
            out["counterexample"] = emit_graph(self.source)
        return out


def _row(args: tuple[Graph, ReductionInstance, int]) -> VerificationRow:
    g, inst, t = args
    lhs = has_vertex_cover_of_size(g, t).found
    rhs = has_stopping_set_of_size(inst.product, target_size(t, inst)).found
    return VerificationRow(t, lhs, rhs)


def verify_corollaries(g: Graph, workers: int = 1) -> VerificationReport:
    """Check both corollaries on ``g`` for every t in ``[1, n-1]``.

    The cover side uses the brute-force oracle, the stopping-set side the
    exact search. Rows come back ordered by t whatever ``workers`` is.
    """
    inst = build_reduction(g)
    jobs = [(g, inst, t) for t in range(1, g.n)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(_row, jobs))
    else:
        rows = tuple(_row(j) for j in jobs)
    tau = min_vertex_cover(g).size
    dist = stopping_distance(inst.product)
    if not dist.exhaustive:
        raise ReductionInvariantError("distance search did not complete")
    return VerificationReport(g, tau, dist.size, tau * (g.m + 1) + g.m, rows)
