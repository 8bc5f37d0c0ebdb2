import random

import pytest
from hypothesis import strategies as st

from stopset.graphs import Graph, TannerGraph, random_graph

ACCEPTANCE_LINES: list[str] = []

SINGLE_EDGE = Graph(2, ((0, 1),))
TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)))
PATH4 = Graph(4, ((0, 1), (1, 2), (2, 3)))
STAR4 = Graph(5, ((0, 1), (0, 2), (0, 3), (0, 4)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_acceptance():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


@st.composite
def tanner_graphs(draw, max_vars=10, max_checks=8):
    n = draw(st.integers(1, max_vars))
    k = draw(st.integers(0, max_checks))
    rows = draw(st.lists(st.sets(st.integers(0, n - 1)), min_size=k, max_size=k))
    return TannerGraph(n, tuple(tuple(r) for r in rows))


@st.composite
def connected_graphs(draw, max_n=6, max_m=8):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(n - 1, min(max_m, n * (n - 1) // 2)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_graph(n, m, random.Random(seed), connected=True)


def brute_is_stopping_set(t: TannerGraph, s) -> bool:
    """Definition read literally: every check touching s sees >= 2 members."""
    s = set(s)
    for adj in t.check_adj:
        inside = 0
        for i in adj:
            if i in s:
                inside += 1
        if inside == 1:
            return False
    return True
