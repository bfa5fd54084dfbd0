"""Brute-force ground truth for small graphs.

Enumerates every maximum matching by include/exclude search over the
sorted edge list, then unions the unmatched in-copies of all of them.
Nothing here shares code with the Hopcroft-Karp path.
"""

from __future__ import annotations

from .control import ControlReport, Method, input_density
from .errors import GraphError, OracleLimitError
from .graph import BipartiteView, DirectedGraph, to_bipartite
from .matching import Matching

MAX_NODES = 16
MAX_EDGES = 32
DEFAULT_LIMIT = 200_000


def check_size(n: int, num_edges: int) -> None:
    if n > MAX_NODES and num_edges > MAX_EDGES:
        raise OracleLimitError(
            f"graph with {n} nodes and {num_edges} edges is too large for exhaustive "
            f"enumeration (need n <= {MAX_NODES} or edges <= {MAX_EDGES}); use a smaller instance"
        )


def _enumerate_pairs(edges: list[tuple[int, int]], n: int, limit: int) -> list[tuple[tuple[int, int], ...]]:
    m = len(edges)
    # next_group[i]: first edge index with a different left endpoint than edges[i]
    next_group = [m] * m
    for i in range(m - 2, -1, -1):
        next_group[i] = i + 1 if edges[i + 1][0] != edges[i][0] else next_group[i + 1]
    # lefts_after[i]: distinct left endpoints among edges[i:]
    lefts_after = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        lefts_after[i] = lefts_after[next_group[i]] + 1

    right_used = [False] * n
    chosen: list[tuple[int, int]] = []
    best = 0
    found: set[tuple[tuple[int, int], ...]] = set()

    def record() -> None:
        nonlocal best
        size = len(chosen)
        if size > best:
            best = size
            found.clear()
        if size == best:
            found.add(tuple(chosen))
            if len(found) > limit:
                raise OracleLimitError(
                    f"more than {limit} maximum matchings; use a smaller or sparser instance"
                )

    def search(i: int) -> None:
        if len(chosen) + lefts_after[i] < best:
            return
        if i == m:
            record()
            return
        u, v = edges[i]
        if not right_used[v]:
            right_used[v] = True
            chosen.append((u, v))
            # the rest of u's edges conflict with this one
            search(next_group[i])
            chosen.pop()
            right_used[v] = False
        search(i + 1)

    search(0)
    return sorted(found)


def enumerate_max_matchings(b: BipartiteView, limit: int = DEFAULT_LIMIT) -> list[Matching]:
    """All maximum matchings of ``b`` in canonical (sorted pair list) order.

    Raises :class:`OracleLimitError` when more than ``limit`` exist.
    """
    edges = b.edges()
    return [Matching.from_pairs(b.n, pairs) for pairs in _enumerate_pairs(edges, b.n, limit)]


def oracle_possible_inputs(g: DirectedGraph, limit: int = DEFAULT_LIMIT) -> ControlReport:
    """Union of the unmatched in-copies over every maximum matching."""
    check_size(g.n, g.num_edges)
    if g.n < 1:
        raise GraphError("analysis needs at least one node")
    matchings = _enumerate_pairs(to_bipartite(g).edges(), g.n, limit)
    union: set[int] = set()
    for pairs in matchings:
        covered = {v for _, v in pairs}
        union.update(v for v in range(g.n) if v not in covered)
    first = matchings[0]
    first_covered = {v for _, v in first}
    size = len(first)
    return ControlReport(
        n=g.n,
        l=g.num_edges,
        matching_size=size,
        mis=tuple(v for v in range(g.n) if v not in first_covered),
        possible_inputs=tuple(sorted(union)),
        n_pd=input_density(union, g.n),
        perfect_matching=size == g.n,
        method=Method.ORACLE,
    )
