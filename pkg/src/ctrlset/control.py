"""Input-node sets of a directed network.

A maximum matching of the bipartite view leaves some in-copies ``v^in``
unmatched; those nodes form one minimum input set (MIS). A node belongs to
*some* MIS exactly when its in-copy is reachable from an unmatched in-copy
along an alternating path, so every possible input node can be read off a
single maximum matching. :func:`all_input` takes that set straight from
the last layering of Hopcroft-Karp; :func:`baseline_all_input` is the older
O(NL) per-node deletion test kept for comparison.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import GraphError, InvariantViolation, MatchingError
from .graph import BipartiteView, DirectedGraph, to_bipartite
from .matching import UNMATCHED, Matching, run_hopcroft_karp, verify_maximum

NodeSet = tuple[int, ...]


class Method(str, Enum):
    ALL_INPUT = "all_input"
    BASELINE = "baseline"
    ORACLE = "oracle"


@dataclass(frozen=True)
class ControlReport:
    """Result of an input-node analysis.

    ``mis`` is the MIS of the matching that was found; ``possible_inputs``
    is the union of all MISs. A perfect matching yields empty sets and
    ``perfect_matching=True``; callers wanting the ``max(1, N - |M|)``
    driver-count convention must apply it themselves.
    """

    n: int
    l: int
    matching_size: int
    mis: NodeSet
    possible_inputs: NodeSet
    n_pd: Fraction
    perfect_matching: bool
    method: Method


def _node_set(values: Iterable[int]) -> NodeSet:
    return tuple(sorted(set(int(v) for v in values)))


def input_density(possible: Sequence[int], n: int) -> Fraction:
    """Fraction of nodes that are possible inputs."""
    if n < 1:
        raise GraphError("input density needs at least one node")
    return Fraction(len(possible), n)


def extract_mis(b: BipartiteView, m: Matching) -> NodeSet:
    """Unmatched in-copies of a maximum matching."""
    if not verify_maximum(b, m):
        raise MatchingError("matching is not maximum; its unmatched nodes are not an MIS")
    return _node_set(m.unmatched_right().tolist())


def _alternating_bfs(b: BipartiteView, m: Matching, sources: Sequence[int]) -> dict[int, tuple[int, int] | None]:
    # parent map over right nodes: child -> (parent right node, left node between)
    _, right = b.adjacency_lists()
    ml = m.match_of_left.tolist()
    parent: dict[int, tuple[int, int] | None] = {s: None for s in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for u in right[v]:
            w = ml[u]
            if w == UNMATCHED:
                raise InvariantViolation(
                    f"augmenting path found via {v}^in - {u}^out: matching is not maximum"
                )
            if w in parent:
                continue
            parent[w] = (v, u)
            queue.append(w)
    return parent


def _check_sources(m: Matching, sources: Iterable[int]) -> list[int]:
    srcs = sorted(set(int(s) for s in sources))
    if srcs != m.unmatched_right().tolist():
        raise MatchingError("sources must be exactly the unmatched in-copies of the matching")
    return srcs


def alternating_candidates(b: BipartiteView, m: Matching, sources: Iterable[int]) -> NodeSet:
    """In-copies reachable from ``sources`` by alternating paths, sources included.

    Each step goes ``v^in -> u^out`` over a non-matching edge and then
    ``u^out -> w^in`` over the matching edge of ``u``. Reaching an unmatched
    ``u^out`` would be an augmenting path and raises
    :class:`InvariantViolation`.
    """
    srcs = _check_sources(m, sources)
    return _node_set(_alternating_bfs(b, m, srcs))


def alternating_path(b: BipartiteView, m: Matching, target: int) -> list[tuple[int, int]]:
    """Edges of a shortest alternating path from a free in-copy to ``target^in``.

    Returns ``(u_out, v_in)`` pairs in order from the free end. The first
    edge is unmatched and the last is matched; an empty list means
    ``target`` is itself unmatched. Raises :class:`ValueError` when no such
    path exists.
    """
    parent = _alternating_bfs(b, m, m.unmatched_right().tolist())
    if target not in parent:
        raise ValueError(f"node {target} is not reachable by an alternating path")
    path: list[tuple[int, int]] = []
    v = target
    while parent[v] is not None:
        prev, u = parent[v]
        path.append((u, v))  # matched edge into v
        path.append((u, prev))  # unmatched edge out of prev
        v = prev
    path.reverse()
    return path


def flip_path(m: Matching, path: Sequence[tuple[int, int]]) -> Matching:
    """Swap matched and unmatched edges along ``path``."""
    original = set(m.pairs())
    matched = set(original)
    for e in path:
        if e in original:
            matched.discard(e)
        else:
            matched.add(e)
    return Matching.from_pairs(m.n, sorted(matched))


def _report(g: DirectedGraph, m: Matching, possible: NodeSet, method: Method) -> ControlReport:
    if g.n < 1:
        raise GraphError("analysis needs at least one node")
    mis = _node_set(m.unmatched_right().tolist())
    return ControlReport(
        n=g.n,
        l=g.num_edges,
        matching_size=m.size,
        mis=mis,
        possible_inputs=possible,
        n_pd=input_density(possible, g.n),
        perfect_matching=m.size == g.n,
        method=method,
    )


def all_input_with_matching(g: DirectedGraph) -> tuple[ControlReport, Matching]:
    if g.n < 1:
        raise GraphError("analysis needs at least one node")
    m, dist = run_hopcroft_karp(to_bipartite(g))
    # the final layering found no augmenting path, so its reached set is the answer
    reached = np.flatnonzero(dist != _kernels.UNREACHED)
    return _report(g, m, tuple(reached.tolist()), Method.ALL_INPUT), m


def all_input(g: DirectedGraph) -> ControlReport:
    """Maximum matching, one MIS and all possible input nodes in one Hopcroft-Karp run."""
    return all_input_with_matching(g)[0]


def baseline_all_input(g: DirectedGraph, matching: Matching | None = None) -> ControlReport:
    """Possible inputs by deleting each matched in-copy and re-augmenting.

    Takes O(NL) time. ``matching`` may supply a maximum matching to
    start from; by default Hopcroft-Karp is run first.
    """
    if g.n < 1:
        raise GraphError("analysis needs at least one node")
    b = to_bipartite(g)
    m = matching if matching is not None else run_hopcroft_karp(b)[0]
    ml = m.match_of_left.copy()
    mr = m.match_of_right.copy()
    mask = _kernels.removal_probe_kernel(b.n, b.left_ptr, b.left_idx, ml, mr)
    if not (np.array_equal(ml, m.match_of_left) and np.array_equal(mr, m.match_of_right)):
        raise InvariantViolation("baseline probes did not restore the matching")
    return _report(g, m, tuple(np.flatnonzero(mask).tolist()), Method.BASELINE)
