"""Maximum bipartite matching and independent checks of a matching."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import MatchingError
from .graph import NODE_DTYPE, BipartiteView

UNMATCHED = -1


@dataclass(frozen=True, eq=False)
class Matching:
    """Partner arrays for both sides of a :class:`BipartiteView`.

    ``match_of_left[u]`` is the right partner of ``u^out`` (or ``-1``) and
    ``match_of_right[v]`` the left partner of ``v^in``. ``phases`` records how
    many layering rounds produced the matching; it is not part of equality.
    """

    match_of_left: np.ndarray
    match_of_right: np.ndarray
    size: int
    phases: int = field(default=0, compare=False)

    @property
    def n(self) -> int:
        return int(self.match_of_left.shape[0])

    @classmethod
    def empty(cls, n: int) -> Matching:
        return cls(np.full(n, UNMATCHED, NODE_DTYPE), np.full(n, UNMATCHED, NODE_DTYPE), 0)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Matching:
        """Fill partner arrays from ``(u_out, v_in)`` pairs without validating them.

        Later pairs overwrite earlier ones, so conflicting input yields an
        inconsistent matching that :func:`verify_valid` rejects.
        """
        pairs = list(pairs)
        ml = np.full(n, UNMATCHED, NODE_DTYPE)
        mr = np.full(n, UNMATCHED, NODE_DTYPE)
        for u, v in pairs:
            ml[u] = v
            mr[v] = u
        return cls(ml, mr, len(pairs))

    def pairs(self) -> list[tuple[int, int]]:
        left = np.flatnonzero(self.match_of_left != UNMATCHED)
        return list(zip(left.tolist(), self.match_of_left[left].tolist()))

    def unmatched_right(self) -> np.ndarray:
        return np.flatnonzero(self.match_of_right == UNMATCHED)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return (
            self.size == other.size
            and np.array_equal(self.match_of_left, other.match_of_left)
            and np.array_equal(self.match_of_right, other.match_of_right)
        )

    def __hash__(self) -> int:
        return hash((self.size, self.match_of_left.tobytes()))


def run_hopcroft_karp(b: BipartiteView) -> tuple[Matching, np.ndarray]:
    """Hopcroft-Karp plus the distance labels of its last (failed) layering.

    The layering is rooted at the free right nodes, so in the returned
    labels every right node reachable from a free right node by an
    alternating path has a finite distance.
    """
    ml = np.full(b.n, UNMATCHED, NODE_DTYPE)
    mr = np.full(b.n, UNMATCHED, NODE_DTYPE)
    phases, dist = _kernels.hopcroft_karp_kernel(b.n, b.right_ptr, b.right_idx, ml, mr)
    size = int(np.count_nonzero(ml != UNMATCHED))
    ml.setflags(write=False)
    mr.setflags(write=False)
    return Matching(ml, mr, size, int(phases)), dist


def hopcroft_karp(b: BipartiteView) -> Matching:
    """Maximum matching of ``b`` (deterministic; lowest indices tried first)."""
    return run_hopcroft_karp(b)[0]


def _check_dims(b: BipartiteView, m: Matching) -> None:
    if m.match_of_left.shape != (b.n,) or m.match_of_right.shape != (b.n,):
        raise MatchingError(
            f"matching arrays have shapes {m.match_of_left.shape}/{m.match_of_right.shape}, "
            f"graph has {b.n} nodes per side"
        )


def verify_valid(b: BipartiteView, m: Matching) -> bool:
    """True iff the partner arrays agree, ``size`` is right and every pair is an edge."""
    _check_dims(b, m)
    ml, mr, n = m.match_of_left, m.match_of_right, b.n
    if ((ml < UNMATCHED) | (ml >= n)).any() or ((mr < UNMATCHED) | (mr >= n)).any():
        return False
    left = np.flatnonzero(ml != UNMATCHED)
    right = np.flatnonzero(mr != UNMATCHED)
    if len(left) != m.size or len(right) != m.size:
        return False
    if not (mr[ml[left]] == left).all() or not (ml[mr[right]] == right).all():
        return False
    # edge membership: CSR rows are sorted, so row*n + col is a sorted key array
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(b.left_ptr))
    edge_keys = rows * n + b.left_idx
    wanted = left * n + ml[left]
    pos = np.searchsorted(edge_keys, wanted)
    pos[pos == len(edge_keys)] = 0
    if len(wanted) and (len(edge_keys) == 0 or not (edge_keys[pos] == wanted).all()):
        return False
    return True


def verify_maximum(b: BipartiteView, m: Matching) -> bool:
    """Berge check: True iff no augmenting path starts at a free right node.

    Plain breadth-first search over Python lists, kept separate from the
    compiled matching code.
    """
    if not verify_valid(b, m):
        raise MatchingError("matching is not valid for this graph")
    _, right = b.adjacency_lists()
    ml = m.match_of_left.tolist()
    mr = m.match_of_right.tolist()
    seen = [False] * b.n
    queue = deque()
    for v in range(b.n):
        if mr[v] == UNMATCHED:
            seen[v] = True
            queue.append(v)
    while queue:
        v = queue.popleft()
        for u in right[v]:
            w = ml[u]
            if w == UNMATCHED:
                return False
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return True
