"""Directed graph storage and its bipartite (out-copy / in-copy) view.

Graphs are stored as two CSR adjacency structures over dense node ids
``0..n-1``: ``out_ptr/out_idx`` lists successors and ``in_ptr/in_idx``
lists predecessors, both sorted ascending. Instances are treated as
immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import GraphError

INDEX_DTYPE = np.int64
# adjacency entries and partner arrays; keeps the compiled loops cache-friendly
NODE_DTYPE = np.int32


def _csr(n: int, rows: np.ndarray, cols: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # rows/cols must already be sorted by (row, col)
    counts = np.bincount(rows, minlength=n)
    ptr = np.zeros(n + 1, dtype=INDEX_DTYPE)
    np.cumsum(counts, out=ptr[1:])
    return ptr, np.ascontiguousarray(cols, dtype=NODE_DTYPE)


def _freeze(*arrays: np.ndarray) -> None:
    for a in arrays:
        a.setflags(write=False)


class DirectedGraph:
    """Deduplicated digraph on ``n`` dense node ids.

    Self-loops are kept. Use :func:`build_graph` to construct one.
    """

    __slots__ = ("n", "src", "dst", "out_ptr", "out_idx", "in_ptr", "in_idx")

    def __init__(self, n: int, src: np.ndarray, dst: np.ndarray):
        # src/dst: deduplicated and sorted lexicographically by (src, dst)
        self.n = n
        self.src = src
        self.dst = dst
        self.out_ptr, self.out_idx = _csr(n, src, dst)
        order = np.lexsort((src, dst))
        self.in_ptr, self.in_idx = _csr(n, dst[order], src[order])
        _freeze(self.src, self.dst, self.out_ptr, self.out_idx, self.in_ptr, self.in_idx)

    @property
    def num_edges(self) -> int:
        return int(self.src.shape[0])

    def out_neighbors(self, u: int) -> np.ndarray:
        return self.out_idx[self.out_ptr[u]:self.out_ptr[u + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        return self.in_idx[self.in_ptr[v]:self.in_ptr[v + 1]]

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.out_ptr)

    def in_degrees(self) -> np.ndarray:
        return np.diff(self.in_ptr)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list sorted by (src, dst)."""
        return list(zip(self.src.tolist(), self.dst.tolist()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.src, other.src)
            and np.array_equal(self.dst, other.dst)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.src.tobytes(), self.dst.tobytes()))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={self.num_edges})"


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]] | np.ndarray) -> DirectedGraph:
    """Build a graph from ``(src, dst)`` pairs.

    Duplicate pairs are dropped and the result does not depend on the
    order of ``edge_pairs``. Raises :class:`GraphError` naming the first
    pair whose endpoint is outside ``[0, n)``.
    """
    if not 0 <= n < np.iinfo(NODE_DTYPE).max:
        raise GraphError(f"node count must be in [0, {np.iinfo(NODE_DTYPE).max}), got {n}")
    if isinstance(edge_pairs, np.ndarray):
        arr = np.asarray(edge_pairs, dtype=INDEX_DTYPE).reshape(-1, 2)
    else:
        pairs = list(edge_pairs)
        arr = np.array(pairs, dtype=INDEX_DTYPE).reshape(-1, 2) if pairs else np.empty((0, 2), INDEX_DTYPE)
    src, dst = arr[:, 0], arr[:, 1]
    bad = (src < 0) | (src >= n) | (dst < 0) | (dst >= n)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise GraphError(f"edge #{i} ({int(src[i])}, {int(dst[i])}) has an endpoint outside [0, {n})")
    keys = np.unique(src * n + dst) if n else np.empty(0, INDEX_DTYPE)
    return DirectedGraph(n, keys // max(n, 1), keys % max(n, 1))


@dataclass(frozen=True, eq=False)
class BipartiteView:
    """Split representation of a digraph.

    Left node ``u`` stands for ``u^out`` and right node ``v`` for ``v^in``;
    edge ``u -> v`` becomes the undirected pair ``(u^out, v^in)``.
    ``left_ptr/left_idx`` hold the right neighbours of each left node and
    ``right_ptr/right_idx`` the left neighbours of each right node.
    """

    n: int
    left_ptr: np.ndarray
    left_idx: np.ndarray
    right_ptr: np.ndarray
    right_idx: np.ndarray

    @property
    def num_edges(self) -> int:
        return int(self.left_idx.shape[0])

    def left_adj(self, u: int) -> np.ndarray:
        return self.left_idx[self.left_ptr[u]:self.left_ptr[u + 1]]

    def right_adj(self, v: int) -> np.ndarray:
        return self.right_idx[self.right_ptr[v]:self.right_ptr[v + 1]]

    def edges(self) -> list[tuple[int, int]]:
        """All ``(u_out, v_in)`` pairs, sorted."""
        rows = np.repeat(np.arange(self.n), np.diff(self.left_ptr))
        return list(zip(rows.tolist(), self.left_idx.tolist()))

    def adjacency_lists(self) -> tuple[list[list[int]], list[list[int]]]:
        """Python lists of the left and right adjacencies, for pure-Python code paths."""
        lp, li = self.left_ptr.tolist(), self.left_idx.tolist()
        rp, ri = self.right_ptr.tolist(), self.right_idx.tolist()
        left = [li[lp[u]:lp[u + 1]] for u in range(self.n)]
        right = [ri[rp[v]:rp[v + 1]] for v in range(self.n)]
        return left, right


def to_bipartite(g: DirectedGraph) -> BipartiteView:
    # shares the graph's read-only arrays, no copy
    return BipartiteView(g.n, g.out_ptr, g.out_idx, g.in_ptr, g.in_idx)


@dataclass(frozen=True)
class DegreeStats:
    avg_degree: Fraction
    min_in: int
    max_in: int
    min_out: int
    max_out: int


def degree_stats(g: DirectedGraph) -> DegreeStats:
    """Degree summary; ``avg_degree`` is the average total degree ``2L/n``."""
    if g.n == 0:
        raise GraphError("average degree is undefined for a graph with no nodes")
    ind, outd = g.in_degrees(), g.out_degrees()
    return DegreeStats(
        avg_degree=Fraction(2 * g.num_edges, g.n),
        min_in=int(ind.min()),
        max_in=int(ind.max()),
        min_out=int(outd.min()),
        max_out=int(outd.max()),
    )
