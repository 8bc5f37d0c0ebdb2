"""Peeling decoder for erasures and a seeded Monte Carlo harness.

Only erasure positions are tracked. A check with exactly one erased
neighbour determines that neighbour; repeating until nothing changes leaves
the largest stopping set inside the erasure pattern, so decoding fails
exactly when the pattern contains a nonempty stopping set.
"""

from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .graphs import TannerGraph
from .stopping import VarSet, as_varset, is_stopping_set


@dataclass(frozen=True)
class PeelResult:
    residual: VarSet
    rounds: int

    @property
    def success(self) -> bool:
        return len(self.residual) == 0

    def to_dict(self) -> dict:
        return {"success": self.success, "residual": self.residual.to_text(), "rounds": self.rounds}


def _erasure_counts(t: TannerGraph, e: VarSet) -> tuple[list[bool], list[int]]:
    is_erased = [False] * t.n_vars
    for i in e.members:
        is_erased[i] = True
    count = [sum(1 for i in adj if is_erased[i]) for adj in t.check_adj]
    return is_erased, count


def peel(t: TannerGraph, erased: VarSet | Iterable[int]) -> PeelResult:
    """Run the peeling decoder to its fixpoint.

    Each round resolves, in FIFO order, every check that had exactly one
    erased neighbour when the round started; ``rounds`` counts the rounds
    that recovered something.
    """
    e = as_varset(t, erased)
    is_erased, count = _erasure_counts(t, e)
    queue = deque(c for c in range(t.n_checks) if count[c] == 1)
    rounds = 0
    while queue:
        nxt: deque[int] = deque()
        for c in queue:
            if count[c] != 1:
                continue
            v = next(i for i in t.check_adj[c] if is_erased[i])
            is_erased[v] = False
            for d in t.var_adj[v]:
                count[d] -= 1
                if count[d] == 1:
                    nxt.append(d)
        rounds += 1
        queue = nxt

    residual = VarSet.of(t.n_vars, (i for i in range(t.n_vars) if is_erased[i]))
    if not is_stopping_set(t, residual):
        raise AssertionError("peeling residual is not a stopping set")
    return PeelResult(residual, rounds)


def peel_random_order(t: TannerGraph, erased: VarSet | Iterable[int], rng: random.Random) -> VarSet:
    """Peel one check at a time, picking uniformly among resolvable checks.

    Returns the residual only; used to compare schedules.
    """
    e = as_varset(t, erased)
    is_erased, count = _erasure_counts(t, e)
    ready = {c for c in range(t.n_checks) if count[c] == 1}
    while ready:
        c = rng.choice(sorted(ready))
        ready.discard(c)
        v = next(i for i in t.check_adj[c] if is_erased[i])
        is_erased[v] = False
        for d in t.var_adj[v]:
            count[d] -= 1
            if count[d] == 1:
                ready.add(d)
            else:
                ready.discard(d)
    return VarSet.of(t.n_vars, (i for i in range(t.n_vars) if is_erased[i]))


@dataclass(frozen=True)
class MCReport:
    epsilon: float
    trials: int
    seed: int
    shards: int
    failures: int

    @property
    def rate(self) -> float:
        return self.failures / self.trials

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "trials": self.trials,
            "seed": self.seed,
            "shards": self.shards,
            "failures": self.failures,
            "rate": self.rate,
        }


def _shard_failures(args: tuple[TannerGraph, float, int, int, int]) -> int:
    t, epsilon, trials, seed, shard = args
    rng = random.Random(f"{seed}:{shard}")
    failures = 0
    for _ in range(trials):
        erased = [i for i in range(t.n_vars) if rng.random() < epsilon]
        if not peel(t, erased).success:
            failures += 1
    return failures


def mc_failure_rate(
    t: TannerGraph, epsilon: float, trials: int, seed: int, shards: int = 1, workers: int = 1
) -> MCReport:
    """Estimate the decoding failure probability under i.i.d. erasures.

    Trials are split into ``shards`` streams seeded from ``(seed, shard)``;
    the result depends on the shard count but not on ``workers``.
    """
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"erasure probability {epsilon} outside [0, 1]")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if shards < 1:
        raise ValueError("shards must be at least 1")
    base, extra = divmod(trials, shards)
    jobs = [(t, epsilon, base + (k < extra), seed, k) for k in range(shards)]
    if workers > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            failures = sum(pool.map(_shard_failures, jobs))
    else:
        failures = sum(_shard_failures(j) for j in jobs)
    return MCReport(epsilon, trials, seed, shards, failures)
