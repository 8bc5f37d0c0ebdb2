"""Brute-force vertex cover solvers used as ground truth.

Two independent routes are provided: :func:`min_vertex_cover` branches on the
endpoints of an uncovered edge, :func:`min_vertex_cover_enum` scans subsets
in order of size. Tests cross-check one against the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import Graph


@dataclass(frozen=True)
class CoverOutcome:
    status: str  # "found" | "none"
    size: int | None
    witness: frozenset[int] | None
    exhaustive: bool = True

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "size": self.size,
            "witness": None if self.witness is None else ",".join(map(str, sorted(self.witness))),
            "exhaustive": self.exhaustive,
        }


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside [0, {g.n})")
    return all(u in s or v in s for u, v in g.edges)


def uncovered_edge(g: Graph, s: Iterable[int]) -> tuple[int, int] | None:
    s = set(s)
    for u, v in g.edges:
        if u not in s and v not in s:
            return (u, v)
    return None


def min_vertex_cover(g: Graph, canonical: bool = False) -> CoverOutcome:
    """Minimum vertex cover by branching on the first uncovered edge.

    Cost is roughly ``2**tau`` search nodes; fine up to n of about 20.
    With ``canonical`` the witness is the lexicographically smallest cover
    of minimum size.
    """
    best = list(range(g.n))

    def go(chosen: list[int], edges: list[tuple[int, int]]):
        nonlocal best
        if len(chosen) >= len(best):
            return
        if not edges:
            best = sorted(chosen)
            return
        u, v = edges[0]
        for w in (u, v):
            go(chosen + [w], [e for e in edges if w not in e])

    go([], list(g.edges))
    tau = len(best)
    witness = frozenset(best)
    if canonical:
        witness = next(frozenset(c) for c in combinations(range(g.n), tau) if is_vertex_cover(g, c))
    return CoverOutcome("found", tau, witness)


def min_vertex_cover_enum(g: Graph) -> CoverOutcome:
    """Minimum vertex cover by scanning all subsets, smallest first."""
    for k in range(g.n + 1):
        for c in combinations(range(g.n), k):
            if is_vertex_cover(g, c):
                return CoverOutcome("found", k, frozenset(c))
    raise AssertionError("the full vertex set is always a cover")


def has_vertex_cover_of_size(g: Graph, t: int) -> CoverOutcome:
    """Exact-size cover: exists iff ``tau <= t <= n``, witnessed by padding."""
    if not 0 <= t <= g.n:
        raise ValueError(f"cover size {t} outside [0, {g.n}]")
    best = min_vertex_cover(g)
    if best.size > t:
        return CoverOutcome("none", None, None)
    witness = set(best.witness)
    for v in range(g.n):
        if len(witness) == t:
            break
        witness.add(v)
    return CoverOutcome("found", t, frozenset(witness))
