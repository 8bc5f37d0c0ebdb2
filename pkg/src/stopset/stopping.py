"""Stopping sets: verification, brute-force enumeration and exact search.

A set S of variables is a stopping set when no check sees exactly one member
of S. The exact search below is a depth-first branch-and-bound over
three-valued variable states with unit propagation: a check holding exactly
one chosen variable and exactly one undecided neighbour forces that neighbour
in, and with no undecided neighbour left the branch is dead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .graphs import TannerGraph

FOUND = "found"
NONE_WITHIN_BUDGET = "none-within-budget"

_IN, _OUT, _FREE = 1, 0, -1


@dataclass(frozen=True)
class VarSet:
    """A set of variable indices tied to a universe ``[0, universe_size)``."""

    members: frozenset[int]
    universe_size: int

    def __post_init__(self):
        members = frozenset(self.members)
        bad = [i for i in members if not 0 <= i < self.universe_size]
        if bad:
            raise ValueError(f"indices {sorted(bad)} outside [0, {self.universe_size})")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, universe_size: int, members: Iterable[int] = ()) -> VarSet:
        return cls(frozenset(members), universe_size)

    @classmethod
    def parse(cls, text: str, universe_size: int) -> VarSet:
        text = text.strip()
        if not text:
            return cls.of(universe_size)
        try:
            return cls.of(universe_size, (int(x) for x in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad variable set {text!r}: {exc}") from None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def _check(self, other: VarSet):
        if other.universe_size != self.universe_size:
            raise ValueError("variable sets over different universes")

    def __or__(self, other: VarSet) -> VarSet:
        self._check(other)
        return VarSet(self.members | other.members, self.universe_size)

    def __and__(self, other: VarSet) -> VarSet:
        self._check(other)
        return VarSet(self.members & other.members, self.universe_size)

    def __le__(self, other: VarSet) -> bool:
        self._check(other)
        return self.members <= other.members

    def complement(self) -> VarSet:
        return VarSet(frozenset(range(self.universe_size)) - self.members, self.universe_size)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def to_text(self) -> str:
        return ",".join(map(str, self.sorted()))


def as_varset(t: TannerGraph, s: VarSet | Iterable[int]) -> VarSet:
    if isinstance(s, VarSet):
        if s.universe_size != t.n_vars:
            raise ValueError(
                f"variable set universe {s.universe_size} does not match graph with {t.n_vars} variables"
            )
        return s
    return VarSet.of(t.n_vars, s)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    size: int | None
    witness: VarSet | None
    nodes_explored: int
    exhaustive: bool
    budget: int | None = None

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "size": self.size,
            "witness": None if self.witness is None else self.witness.to_text(),
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
        }


def neighborhood(t: TannerGraph, s: VarSet | Iterable[int]) -> frozenset[int]:
    s = as_varset(t, s)
    return frozenset(c for i in s.members for c in t.var_adj[i])


def is_stopping_set(t: TannerGraph, s: VarSet | Iterable[int]) -> bool:
    """Linear in the number of Tanner edges touching ``s``."""
    s = as_varset(t, s)
    hits: dict[int, int] = {}
    for i in s.members:
        for c in t.var_adj[i]:
            hits[c] = hits.get(c, 0) + 1
    return all(k >= 2 for k in hits.values())


# ---------------------------------------------------------------------------
# brute force

_CHUNK = 1 << 20


def enumerate_stopping_sets(t: TannerGraph, max_size: int | None = None) -> Iterator[VarSet]:
    """Yield every nonempty stopping set of size <= ``max_size``.

    Plain exhaustive scan over all ``2**n_vars`` subsets, vectorised over
    bitmasks. Output order is by size, then lexicographic on sorted members.
    Exponential by design; keep ``n_vars`` around 24 or below.
    """
    n = t.n_vars
    if n > 62:
        raise ValueError("brute-force enumeration is limited to 62 variables")
    if max_size is None:
        max_size = n
    masks = sorted({sum(1 << i for i in adj) for adj in t.check_adj if adj})
    np_masks = [np.uint64(mk) for mk in masks]
    total = 1 << n
    hits: list[int] = []
    for start in range(1, total, _CHUNK):
        s = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        if max_size < n:
            s = s[np.bitwise_count(s) <= max_size]
        for mk in np_masks:
            s = s[np.bitwise_count(s & mk) != 1]
            if not len(s):
                break
        hits.extend(s.tolist())
    hits.sort(key=lambda x: (x.bit_count(), _bits(x)))
    for x in hits:
        yield VarSet.of(n, _bits(x))


def _bits(x: int) -> tuple[int, ...]:
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# branch and bound


class _State:
    __slots__ = ("val", "inc", "free", "size", "nfree")

    def __init__(self, val, inc, free, size, nfree):
        self.val = val
        self.inc = inc
        self.free = free
        self.size = size
        self.nfree = nfree

    def copy(self) -> _State:
        return _State(self.val[:], self.inc[:], self.free[:], self.size, self.nfree)


class _Searcher:
    """Finds stopping sets with size in ``[lo, hi]``.

    With ``minimize`` set, every solution tightens ``hi`` to one below its
    size and the search carries on until exhausted, so the last solution is
    a minimum. Otherwise the first solution ends the search.
    """

    def __init__(self, t: TannerGraph, lo: int, hi: int, minimize: bool, max_nodes: int | None = None):
        self.t = t
        self.lo = lo
        self.hi = hi
        self.minimize = minimize
        self.max_nodes = max_nodes
        self.nodes = 0
        self.best: list[int] | None = None
        self.aborted = False

    def root(self, fixed: dict[int, int] | None = None) -> _State | None:
        t = self.t
        st = _State([_FREE] * t.n_vars, [0] * t.n_checks, [len(a) for a in t.check_adj], 0, t.n_vars)
        for v, x in sorted((fixed or {}).items()):
            if st.val[v] == _FREE:
                if not self._assign(st, v, _IN if x else _OUT):
                    return None
            elif st.val[v] != (_IN if x else _OUT):
                return None
        return st

    def _assign(self, st: _State, v: int, x: int) -> bool:
        t = self.t
        check_adj, var_adj = t.check_adj, t.var_adj
        val, inc, free = st.val, st.inc, st.free
        queue = [(v, x)]
        while queue:
            v, x = queue.pop()
            if val[v] != _FREE:
                if val[v] != x:
                    return False
                continue
            val[v] = x
            st.nfree -= 1
            if x == _IN:
                st.size += 1
                if st.size > self.hi:
                    return False
            for c in var_adj[v]:
                free[c] -= 1
                if x == _IN:
                    inc[c] += 1
                if inc[c] == 1:
                    if free[c] == 0:
                        return False
                    if free[c] == 1:
                        for w in check_adj[c]:
                            if val[w] == _FREE:
                                queue.append((w, _IN))
                                break
        return True

    def run(self, root: _State | None):
        if root is None:
            return
        t = self.t
        n_checks, check_adj = t.n_checks, t.check_adj
        stack = [root]
        while stack:
            if self.max_nodes is not None and self.nodes >= self.max_nodes:
                self.aborted = True
                return
            st = stack.pop()
            self.nodes += 1
            if st.size > self.hi or st.size + st.nfree < self.lo:
                continue
            inc, free, val = st.inc, st.free, st.val
            pick = -1
            for c in range(n_checks):
                if inc[c] == 1 and (pick < 0 or free[c] < free[pick]):
                    pick = c
            if pick < 0:
                if st.size >= self.lo:
                    self.best = [i for i in range(t.n_vars) if val[i] == _IN]
                    if not self.minimize:
                        return
                    self.hi = st.size - 1
                    continue
                # nothing violated but too small: grow by the lowest free variable
                branch = val.index(_FREE)
            else:
                if st.size + 1 > self.hi:
                    continue
                branch = next(w for w in check_adj[pick] if val[w] == _FREE)
            out_child = st.copy()
            if self._assign(out_child, branch, _OUT):
                stack.append(out_child)
            in_child = st
            if self._assign(in_child, branch, _IN):
                stack.append(in_child)


def _outcome(t: TannerGraph, s: _Searcher, budget: int | None) -> SearchOutcome:
    exhaustive = not s.aborted
    if s.best is None:
        return SearchOutcome(NONE_WITHIN_BUDGET, None, None, s.nodes, exhaustive, budget)
    witness = VarSet.of(t.n_vars, s.best)
    if not is_stopping_set(t, witness):
        raise AssertionError("search returned a set that is not a stopping set")
    return SearchOutcome(FOUND, len(witness), witness, s.nodes, exhaustive, budget)


def _lex_smallest(t: TannerGraph, size: int) -> tuple[VarSet, int]:
    """Lexicographically smallest stopping set of exactly ``size`` members.

    Decides variables in index order, keeping a variable in whenever some
    stopping set of the right size still extends the current choices.
    Assumes one exists.
    """
    fixed: dict[int, int] = {}
    nodes = 0
    for v in range(t.n_vars):
        fixed[v] = 1
        s = _Searcher(t, size, size, minimize=False)
        s.run(s.root(fixed))
        nodes += s.nodes
        if s.best is None:
            fixed[v] = 0
    members = [v for v, x in fixed.items() if x]
    return VarSet.of(t.n_vars, members), nodes


def stopping_distance(
    t: TannerGraph,
    budget: int | None = None,
    canonical: bool = False,
    max_nodes: int | None = None,
) -> SearchOutcome:
    """Smallest nonempty stopping set, searched up to ``budget`` members.

    ``max_nodes`` caps the search; a capped run reports ``exhaustive=False``
    and whatever incumbent it had. ``canonical`` replaces the witness by the
    lexicographically smallest stopping set of the optimal size.
    """
    hi = t.n_vars if budget is None else min(budget, t.n_vars)
    s = _Searcher(t, 1, hi, minimize=True, max_nodes=max_nodes)
    s.run(s.root())
    out = _outcome(t, s, budget)
    if canonical and out.found and out.exhaustive:
        witness, extra = _lex_smallest(t, out.size)
        out = SearchOutcome(FOUND, out.size, witness, out.nodes_explored + extra, True, budget)
    return out


def has_stopping_set_of_size(
    t: TannerGraph, size: int, canonical: bool = False, max_nodes: int | None = None
) -> SearchOutcome:
    """Is there a stopping set with exactly ``size`` members?

    Not monotone in ``size``: a superset of a stopping set is usually not one.
    ``size=0`` is answered by the empty set.
    """
    if not 0 <= size <= t.n_vars:
        raise ValueError(f"size {size} outside [0, {t.n_vars}]")
    if size == 0:
        return SearchOutcome(FOUND, 0, VarSet.of(t.n_vars), 0, True, size)
    s = _Searcher(t, size, size, minimize=False, max_nodes=max_nodes)
    s.run(s.root())
    out = _outcome(t, s, size)
    if canonical and out.found:
        witness, extra = _lex_smallest(t, size)
        out = SearchOutcome(FOUND, size, witness, out.nodes_explored + extra, True, size)
    return out
