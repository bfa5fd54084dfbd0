"""Timing harness and the randomized oracle sweep."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .control import ControlReport, all_input, baseline_all_input
from .errors import MethodDisagreement
from .graph import DirectedGraph, build_graph, to_bipartite
from .matching import hopcroft_karp
from .oracle import oracle_possible_inputs


def median_time(fn: Callable[[], object], trials: int, warmup: bool = True) -> float:
    """Median wall-clock seconds of ``trials`` calls, after one untimed call."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if warmup:
        fn()
    samples = []
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


@dataclass(frozen=True)
class BenchResult:
    source: str
    n: int
    l: int
    t_new: float
    t_old: float
    speedup: float
    trials: int
    n_pd: Fraction

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "n": self.n,
            "l": self.l,
            "t_new": round(self.t_new, 6),
            "t_old": round(self.t_old, 6),
            "speedup": round(self.speedup, 3),
            "trials": self.trials,
            "n_pd": round(float(self.n_pd), 6),
        }


def run_benchmark(g: DirectedGraph, trials: int = 3, source: str = "", warmup: bool = True) -> BenchResult:
    """Time ``all_input`` against ``baseline_all_input`` on one graph.

    Each method gets one warmup call and ``trials`` timed calls; the median
    is reported. Raises :class:`MethodDisagreement` if the two methods
    return different possible-input sets on any call.
    """
    reports: list[ControlReport] = []

    def new():
        reports.append(all_input(g))

    def old():
        reports.append(baseline_all_input(g))

    t_new = median_time(new, trials, warmup)
    t_old = median_time(old, trials, warmup)
    reference = reports[0].possible_inputs
    if any(r.possible_inputs != reference for r in reports):
        raise MethodDisagreement(f"all_input and baseline disagree on {source or g!r}")
    # guard against a zero reading from a coarse clock
    t_new = max(t_new, 1e-9)
    t_old = max(t_old, 1e-9)
    return BenchResult(
        source=source,
        n=g.n,
        l=g.num_edges,
        t_new=t_new,
        t_old=t_old,
        speedup=t_old / t_new,
        trials=trials,
        n_pd=reports[0].n_pd,
    )


def time_hopcroft_karp(g: DirectedGraph, trials: int = 5) -> float:
    b = to_bipartite(g)
    return median_time(lambda: hopcroft_karp(b), trials)


# densities for the verify sweep; the densest ones keep enumeration under a few ms at n=10
SWEEP_DENSITIES = (0.03, 0.08, 0.15, 0.25, 0.35, 0.5)


def small_random_digraph(n: int, p: float, rng: np.random.Generator) -> DirectedGraph:
    """Every ordered pair, self-loops included, kept independently with probability ``p``."""
    mask = rng.random((n, n)) < p
    src, dst = np.nonzero(mask)
    return build_graph(n, np.column_stack((src, dst)))


@dataclass
class Failure:
    n: int
    edges: list[tuple[int, int]]
    all_input: tuple[int, ...]
    baseline: tuple[int, ...]
    oracle: tuple[int, ...]


@dataclass
class VerifyOutcome:
    passed: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_verify(
    n_max: int,
    trials: int,
    seed: int,
    tamper: Callable[[DirectedGraph, tuple[int, ...]], tuple[int, ...]] | None = None,
) -> VerifyOutcome:
    """Compare all three methods on ``trials`` random digraphs with 1 <= n <= n_max.

    ``tamper`` rewrites the all_input result before comparison; it exists
    so tests can check that a wrong answer is caught.
    """
    if not 1 <= n_max <= 12:
        raise ValueError("n_max must be between 1 and 12")
    rng = np.random.default_rng(seed)
    outcome = VerifyOutcome()
    for _ in range(trials):
        n = int(rng.integers(1, n_max + 1))
        p = float(rng.choice(SWEEP_DENSITIES))
        g = small_random_digraph(n, p, rng)
        new = all_input(g).possible_inputs
        if tamper is not None:
            new = tamper(g, new)
        old = baseline_all_input(g).possible_inputs
        truth = oracle_possible_inputs(g).possible_inputs
        if new == old == truth:
            outcome.passed += 1
        else:
            outcome.failures.append(Failure(n, g.edges(), new, old, truth))
    return outcome
