"""Seeded random digraph models.

Randomness comes from NumPy's ``Generator`` with the PCG64 bit generator
(``numpy.random.default_rng(seed)``), so a seed reproduces the same edge
list on every platform for a given NumPy major version.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import GeneratorError
from .graph import DirectedGraph, build_graph

Model = Literal["er", "scale_free"]

# duplicate/self-loop rejection gives up after this many draws per edge
MAX_ATTEMPTS_PER_EDGE = 50


@dataclass(frozen=True)
class GenSpec:
    model: Model
    n: int
    k_avg: float
    gamma_in: float = 3.0
    gamma_out: float = 3.0
    seed: int = 0

    def __post_init__(self):
        if self.model not in ("er", "scale_free"):
            raise GeneratorError(f"unknown model {self.model!r}")
        if self.n < 1:
            raise GeneratorError("n must be at least 1")
        if self.k_avg < 0:
            raise GeneratorError("k_avg must be non-negative")
        if self.model == "scale_free" and (self.gamma_in <= 2 or self.gamma_out <= 2):
            raise GeneratorError("power-law exponents must exceed 2")
        if not 0 <= self.seed < 2**64:
            raise GeneratorError("seed must be a 64-bit unsigned integer")

    @property
    def num_edges(self) -> int:
        return edge_count(self.n, self.k_avg)


def edge_count(n: int, k_avg: float) -> int:
    """Edges needed for average total degree ``k_avg``: ``round(n * k_avg / 2)``."""
    return int(round(n * k_avg / 2))


def _from_keys(n: int, keys: np.ndarray) -> DirectedGraph:
    return build_graph(n, np.column_stack((keys // n, keys % n)))


def gen_er(n: int, k_avg: float, seed: int) -> DirectedGraph:
    """Uniform random digraph with exactly ``round(n*k_avg/2)`` edges and no self-loops."""
    GenSpec("er", n, k_avg, seed=seed)
    num = edge_count(n, k_avg)
    pairs = n * (n - 1)
    if num > pairs:
        raise GeneratorError(f"{num} edges requested but only {pairs} ordered pairs exist for n={n}")
    rng = np.random.default_rng(seed)
    idx = rng.choice(pairs, size=num, replace=False) if num else np.empty(0, np.int64)
    # index -> (src, dst) over the off-diagonal pairs
    src = idx // max(n - 1, 1)
    rem = idx % max(n - 1, 1)
    dst = rem + (rem >= src)
    return build_graph(n, np.column_stack((src, dst)))


def gen_scale_free(spec: GenSpec) -> DirectedGraph:
    """Static-model scale-free digraph.

    Node ``i`` gets out-weight ``(i+1)**(-1/(gamma_out-1))`` and in-weight
    ``(i+1)**(-1/(gamma_in-1))``. Edges are drawn by picking a source from the
    out-weights and a target from the in-weights, discarding self-loops and
    repeats, until ``round(n*k_avg/2)`` distinct edges exist.
    """
    if spec.model != "scale_free":
        raise GeneratorError(f"expected a scale_free spec, got {spec.model!r}")
    n, num = spec.n, spec.num_edges
    if num == 0:
        return build_graph(n, [])
    ranks = np.arange(1, n + 1, dtype=np.float64)
    cum_out = np.cumsum(ranks ** (-1.0 / (spec.gamma_out - 1)))
    cum_in = np.cumsum(ranks ** (-1.0 / (spec.gamma_in - 1)))
    cum_out /= cum_out[-1]
    cum_in /= cum_in[-1]
    rng = np.random.default_rng(spec.seed)

    accepted = np.empty(0, np.int64)
    attempts = 0
    budget = MAX_ATTEMPTS_PER_EDGE * num
    while len(accepted) < num:
        if attempts >= budget:
            raise GeneratorError(
                f"gave up after {attempts} draws with {len(accepted)}/{num} distinct edges; "
                "lower k_avg for this n"
            )
        need = num - len(accepted)
        batch = min(need + need // 4 + 64, budget - attempts)
        attempts += batch
        src = np.minimum(np.searchsorted(cum_out, rng.random(batch), side="right"), n - 1)
        dst = np.minimum(np.searchsorted(cum_in, rng.random(batch), side="right"), n - 1)
        keys = (src * n + dst)[src != dst]
        merged = np.concatenate((accepted, keys))
        _, first = np.unique(merged, return_index=True)
        accepted = merged[np.sort(first)]
    return _from_keys(n, accepted[:num])


def generate(spec: GenSpec) -> DirectedGraph:
    if spec.model == "er":
        return gen_er(spec.n, spec.k_avg, spec.seed)
    return gen_scale_free(spec)
