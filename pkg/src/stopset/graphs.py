"""Graphs, parity-check matrices and Tanner graphs, with their text formats.

Three formats are supported:

* edge lists: one ``u v`` pair per line, optional ``p <n> <m>`` header,
  ``#`` comments;
* alist (MacKay's sparse format, 1-based indices);
* dense 0/1 matrices: a ``rows cols`` header followed by rows of bits.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class FormatError(ValueError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored canonically: each pair as ``(min, max)`` and the list
    sorted lexicographically. That order is what labels the edges
    ``e_1..e_m`` everywhere else in the package.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite graph between ``n_vars`` variables and ``n_checks`` checks.

    ``check_adj[j]`` is the sorted tuple of variables adjacent to check ``j``;
    ``var_adj`` is the transposed view and is derived, never passed in.
    """

    n_vars: int
    check_adj: tuple[tuple[int, ...], ...]
    var_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = []
        var_adj: list[list[int]] = [[] for _ in range(self.n_vars)]
        for j, row in enumerate(self.check_adj):
            srow = tuple(sorted(row))
            for a, b in zip(srow, srow[1:]):
                if a == b:
                    raise ValueError(f"duplicate edge between check {j} and variable {a}")
            for i in srow:
                if not 0 <= i < self.n_vars:
                    raise ValueError(f"check {j} refers to variable {i} outside [0, {self.n_vars})")
                var_adj[i].append(j)
            rows.append(srow)
        object.__setattr__(self, "check_adj", tuple(rows))
        object.__setattr__(self, "var_adj", tuple(tuple(a) for a in var_adj))

    @property
    def n_checks(self) -> int:
        return len(self.check_adj)

    @property
    def n_edges(self) -> int:
        return sum(len(row) for row in self.check_adj)


@dataclass(frozen=True)
class ParityCheckMatrix:
    """Binary matrix with one row per check and one column per variable."""

    rows: tuple[tuple[int, ...], ...]
    n_cols: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        for j, r in enumerate(rows):
            if len(r) != self.n_cols:
                raise ValueError(f"row {j} has {len(r)} entries, expected {self.n_cols}")
            if any(x not in (0, 1) for x in r):
                raise ValueError(f"row {j} has a non-binary entry")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> ParityCheckMatrix:
        if n_cols is None:
            if not rows:
                raise ValueError("n_cols is required for a matrix with no rows")
            n_cols = len(rows[0])
        return cls(tuple(tuple(r) for r in rows), n_cols)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols


# ---------------------------------------------------------------------------
# general graphs


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Duplicate pairs are collapsed and reported through a single
    ``UserWarning`` carrying the count.
    """
    header: tuple[int, int, int] | None = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise FormatError("second header line", lineno)
            if pairs:
                raise FormatError("header must precede edges", lineno)
            if len(tokens) != 3:
                raise FormatError("header must be 'p <n> <m>'", lineno)
            header = (_int(tokens[1], lineno), _int(tokens[2], lineno), lineno)
            continue
        if len(tokens) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
        if u < 0 or v < 0:
            raise FormatError("negative vertex index", lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        pairs.append((u, v, lineno))

    if header is not None:
        n, m_declared, hline = header
        if m_declared != len(pairs):
            raise FormatError(f"header declares {m_declared} edges, found {len(pairs)}", hline)
    else:
        n = max((max(u, v) for u, v, _ in pairs), default=-1) + 1

    seen: set[tuple[int, int]] = set()
    dups = 0
    for u, v, lineno in pairs:
        if u >= n or v >= n:
            raise FormatError(f"vertex index out of range for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            dups += 1
        seen.add(key)
    if dups:
        warnings.warn(f"collapsed {dups} duplicate edge(s)", stacklevel=2)
    return Graph(n, tuple(seen))


def emit_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    adj = g.neighbors()
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def incidence_graph(g: Graph) -> TannerGraph:
    """Vertex-edge incidence graph: one variable per vertex, one check per edge."""
    return TannerGraph(g.n, tuple((u, v) for u, v in g.edges))


def random_graph(n: int, m: int, rng: random.Random, connected: bool = False) -> Graph:
    """Seeded random simple graph with exactly ``m`` edges.

    With ``connected`` set, a random spanning tree (each vertex attached to a
    uniformly chosen earlier vertex of a random permutation) is drawn first and
    the remaining ``m - n + 1`` edges are sampled uniformly from the rest.
    """
    max_m = n * (n - 1) // 2
    if m < 0 or m > max_m:
        raise ValueError(f"cannot place {m} edges on {n} vertices (max {max_m})")
    if connected and n >= 1 and m < n - 1:
        raise ValueError(f"a connected graph on {n} vertices needs at least {n - 1} edges")
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not connected:
        return Graph(n, tuple(rng.sample(all_pairs, m)))
    order = list(range(n))
    rng.shuffle(order)
    tree = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        tree.add((min(u, v), max(u, v)))
    rest = [p for p in all_pairs if p not in tree]
    extra = rng.sample(rest, m - len(tree))
    return Graph(n, tuple(tree) + tuple(extra))


# ---------------------------------------------------------------------------
# matrices and Tanner graphs


def tanner_from_matrix(h: ParityCheckMatrix) -> TannerGraph:
    return TannerGraph(h.n_cols, tuple(tuple(i for i, x in enumerate(row) if x) for row in h.rows))


def matrix_from_tanner(t: TannerGraph) -> ParityCheckMatrix:
    rows = []
    for adj in t.check_adj:
        row = [0] * t.n_vars
        for i in adj:
            row[i] = 1
        rows.append(tuple(row))
    return ParityCheckMatrix(tuple(rows), t.n_vars)


def random_tanner(n_vars: int, n_checks: int, density: float, rng: random.Random) -> TannerGraph:
    rows = []
    for _ in range(n_checks):
        rows.append(tuple(i for i in range(n_vars) if rng.random() < density))
    return TannerGraph(n_vars, tuple(rows))


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[tuple[str, int]] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            self.toks.extend((tok, lineno) for tok in line.split())
        self.pos = 0

    def next_int(self) -> int:
        if self.pos >= len(self.toks):
            raise FormatError("unexpected end of input")
        tok, lineno = self.toks[self.pos]
        self.pos += 1
        return _int(tok, lineno)

    def skip_zeros(self):
        while self.pos < len(self.toks) and self.toks[self.pos][0] == "0":
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.toks)


def parse_alist(text: str) -> ParityCheckMatrix:
    """Parse an alist document; zero padding of the index lists is accepted."""
    tk = _Tokens(text)
    n, m = tk.next_int(), tk.next_int()
    if n < 0 or m < 0:
        raise FormatError("negative dimensions")
    max_col, max_row = tk.next_int(), tk.next_int()
    col_deg = [tk.next_int() for _ in range(n)]
    row_deg = [tk.next_int() for _ in range(m)]
    if col_deg and max(col_deg) > max_col:
        raise FormatError(f"column degree exceeds declared maximum {max_col}")
    if row_deg and max(row_deg) > max_row:
        raise FormatError(f"row degree exceeds declared maximum {max_row}")

    def read_lists(degs: list[int], bound: int, what: str) -> list[list[int]]:
        out = []
        for k, d in enumerate(degs):
            tk.skip_zeros()
            entries = []
            for _ in range(d):
                x = tk.next_int()
                if not 1 <= x <= bound:
                    raise FormatError(f"{what} {k + 1}: index {x} outside [1, {bound}]")
                entries.append(x - 1)
            if len(set(entries)) != len(entries):
                raise FormatError(f"{what} {k + 1}: repeated index")
            out.append(entries)
        return out

    cols = read_lists(col_deg, m, "column")
    rows = read_lists(row_deg, n, "row")
    tk.skip_zeros()
    if not tk.at_end():
        raise FormatError("trailing tokens after row lists")

    from_cols = {(j, i) for i, col in enumerate(cols) for j in col}
    from_rows = {(j, i) for j, row in enumerate(rows) for i in row}
    if from_cols != from_rows:
        j, i = min(from_cols ^ from_rows)
        raise FormatError(f"row/column lists disagree at row {j + 1}, column {i + 1}")

    dense = [[0] * n for _ in range(m)]
    for j, i in from_rows:
        dense[j][i] = 1
    return ParityCheckMatrix(tuple(tuple(r) for r in dense), n)


def emit_alist(h: ParityCheckMatrix) -> str:
    m, n = h.shape
    cols = [[j + 1 for j in range(m) if h.rows[j][i]] for i in range(n)]
    rows = [[i + 1 for i in range(n) if r[i]] for r in h.rows]
    lines = [
        f"{n} {m}",
        f"{max((len(c) for c in cols), default=0)} {max((len(r) for r in rows), default=0)}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
    ]
    lines.extend(" ".join(map(str, c)) for c in cols)
    lines.extend(" ".join(map(str, r)) for r in rows)
    return "\n".join(lines) + "\n"


def parse_dense(text: str) -> ParityCheckMatrix:
    lines = [(k, ln.split()) for k, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise FormatError("unexpected end of input")
    hline, head = lines[0]
    if len(head) != 2:
        raise FormatError("header must be 'rows cols'", hline)
    r, c = _int(head[0], hline), _int(head[1], hline)
    body = lines[1:]
    if len(body) != r:
        raise FormatError(f"expected {r} rows, found {len(body)}")
    rows = []
    for lineno, toks in body:
        if len(toks) != c:
            raise FormatError(f"expected {c} entries, found {len(toks)}", lineno)
        row = tuple(_int(t, lineno) for t in toks)
        if any(x not in (0, 1) for x in row):
            raise FormatError("entries must be 0 or 1", lineno)
        rows.append(row)
    return ParityCheckMatrix(tuple(rows), c)


def emit_dense(h: ParityCheckMatrix) -> str:
    lines = [f"{h.n_rows} {h.n_cols}"]
    lines.extend(" ".join(map(str, r)) for r in h.rows)
    return "\n".join(lines) + "\n"


def _int(tok: str, lineno: int | None) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"non-numeric token {tok!r}", lineno) from None
