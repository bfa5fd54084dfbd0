"""Compiled inner loops for matching and the per-node baseline.

All kernels work on CSR arrays of a :class:`~ctrlset.graph.BipartiteView`
and on partner arrays where ``-1`` marks an unmatched node.
"""

import numpy as np
from numba import njit

UNREACHED = np.iinfo(np.int32).max


@njit(cache=True)
def _layer(n, right_ptr, right_idx, match_left, match_right, dist, queue):
    # BFS from every free right node along (non-matching, matching) edge
    # pairs. Returns the length of the shortest augmenting path in right
    # hops, or UNREACHED when none exists, in which case dist marks every
    # right node reachable by an alternating path.
    head = 0
    tail = 0
    for v in range(n):
        if match_right[v] == -1:
            dist[v] = 0
            queue[tail] = v
            tail += 1
        else:
            dist[v] = UNREACHED
    limit = UNREACHED
    while head < tail:
        v = queue[head]
        head += 1
        d = dist[v]
        if d >= limit:
            continue
        for k in range(right_ptr[v], right_ptr[v + 1]):
            u = right_idx[k]
            w = match_left[u]
            if w == -1:
                if limit == UNREACHED:
                    limit = d + 1
            elif dist[w] == UNREACHED:
                dist[w] = d + 1
                queue[tail] = w
                tail += 1
    return limit


@njit(cache=True)
def _augment_from(root, right_ptr, right_idx, match_left, match_right, dist, limit,
                  arc, stack_v, stack_u):
    # Iterative DFS for one shortest augmenting path starting at free right
    # node ``root``. Uses current-arc pointers so each edge is scanned at most
    # once per phase; dead ends get dist = UNREACHED.
    depth = 0
    stack_v[0] = root
    arc[root] = right_ptr[root]
    while depth >= 0:
        v = stack_v[depth]
        advanced = False
        while arc[v] < right_ptr[v + 1]:
            u = right_idx[arc[v]]
            arc[v] += 1
            w = match_left[u]
            if w == -1:
                if dist[v] + 1 == limit:
                    stack_u[depth] = u
                    # flip the path root .. v, u
                    for i in range(depth + 1):
                        vv = stack_v[i]
                        uu = stack_u[i]
                        match_right[vv] = uu
                        match_left[uu] = vv
                    return True
            elif dist[w] == dist[v] + 1:
                stack_u[depth] = u
                depth += 1
                stack_v[depth] = w
                arc[w] = right_ptr[w]
                advanced = True
                break
        if not advanced:
            dist[v] = UNREACHED
            depth -= 1
    return False


@njit(cache=True)
def hopcroft_karp_kernel(n, right_ptr, right_idx, match_left, match_right):
    """Run Hopcroft-Karp in place; returns (phases, dist of final layering)."""
    dist = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    arc = np.empty(n, dtype=np.int64)
    stack_v = np.empty(n + 1, dtype=np.int32)
    stack_u = np.empty(n + 1, dtype=np.int32)
    phases = 0
    while True:
        phases += 1
        limit = _layer(n, right_ptr, right_idx, match_left, match_right, dist, queue)
        if limit == UNREACHED:
            return phases, dist
        for v in range(n):
            if match_right[v] == -1 and dist[v] == 0:
                _augment_from(v, right_ptr, right_idx, match_left, match_right,
                              dist, limit, arc, stack_v, stack_u)


@njit(cache=True)
def removal_probe_kernel(n, left_ptr, left_idx, match_left, match_right):
    """Per-node deletion test of the prior method.

    For each matched right node ``v`` (partner ``u``): delete ``v``, free
    ``u`` and look for one augmenting path starting at ``u``. Success means
    a maximum matching of the original size leaves ``v`` unmatched. The
    matching is restored after every probe. Returns a boolean mask of
    right nodes that are possible inputs (free ones included).
    """
    possible = np.zeros(n, dtype=np.bool_)
    seen = np.full(n, -1, dtype=np.int32)
    stack = np.empty(n + 1, dtype=np.int32)
    for v in range(n):
        u0 = match_right[v]
        if u0 == -1:
            possible[v] = True
            continue
        # delete v, free its partner
        match_left[u0] = -1
        match_right[v] = -1
        seen[v] = v
        top = 0
        stack[0] = u0
        top = 1
        found = False
        while top > 0 and not found:
            top -= 1
            x = stack[top]
            for k in range(left_ptr[x], left_ptr[x + 1]):
                w = left_idx[k]
                if seen[w] == v:
                    continue
                seen[w] = v
                if match_right[w] == -1:
                    found = True
                    break
                stack[top] = match_right[w]
                top += 1
        # undo the deletion
        match_left[u0] = v
        match_right[v] = u0
        possible[v] = found
    return possible
