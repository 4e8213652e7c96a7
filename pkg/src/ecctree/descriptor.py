"""The eccentric connectivity index  xi^c(T) = sum_v deg(v) * ecc(v).

Two independent routes:

* :func:`xi_oracle` - eccentricities from a breadth-first search at every
  vertex, O(n^2).
* :func:`xi_linear` - root the tree at a center ``c``. For a vertex ``v`` in
  the branch hanging off neighbour ``c_i``::

      ecc(v) = d(v, c) + 1 + max_{j != i} r_j,     ecc(c) = 1 + max_i r_i

  where ``r_j`` is the height of the branch rooted at ``c_j``. Keeping the
  two largest heights makes "max over the other branches" O(1).

The linear route runs in pure Python for small trees and on numpy/scipy
arrays for large ones; both evaluate the same formula.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .tree_core import EccProfile, ecc_profile_oracle

__all__ = [
    "SubtreeDepths",
    "xi_oracle",
    "xi_from_profile",
    "subtree_depths",
    "find_center",
    "eccentricities_linear",
    "xi_linear",
    "xi_path_closed",
    "xi_star_closed",
    "xi_broom_closed",
]

# below this size the interpreter loop beats numpy call overhead
VECTOR_THRESHOLD = 20_000


@dataclass(frozen=True)
class SubtreeDepths:
    root: int
    parent: tuple
    down: tuple


def xi_from_profile(t, profile):
    return sum(d * e for d, e in zip(t.degrees, profile.ecc))


def xi_oracle(t):
    return xi_from_profile(t, ecc_profile_oracle(t))


def _bfs(adj, source, n):
    dist = [-1] * n
    parent = [-1] * n
    dist[source] = 0
    order = [source]
    push = order.append
    for v in order:
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                parent[w] = v
                push(w)
    return dist, parent, order


def subtree_depths(t, root):
    """Height of every vertex's subtree when ``t`` hangs from ``root``.

    Iterative, so a path of a million vertices is fine.
    """
    if not 0 <= root < t.n:
        raise ParameterError(f"root {root} is not a vertex")
    _, parent, order = _bfs(t.adjacency, root, t.n)
    down = [0] * t.n
    for v in reversed(order):
        p = parent[v]
        if p >= 0 and down[v] >= down[p]:
            down[p] = down[v] + 1
    return SubtreeDepths(root, tuple(parent), tuple(down))


def _center_from_sweep(dist_a, parent_a, b):
    # walk halfway back along the diameter path a..b
    diam = dist_a[b]
    v = b
    for _ in range(diam // 2):
        v = parent_a[v]
    if diam % 2:
        return min(v, parent_a[v])
    return v


def find_center(t):
    """A center vertex located with two breadth-first sweeps.

    For a bicentral tree the smaller vertex id is returned.
    """
    if t.n <= 2:
        return 0
    adj, n = t.adjacency, t.n
    d0, _, _ = _bfs(adj, 0, n)
    a = max(range(n), key=d0.__getitem__)
    da, pa, _ = _bfs(adj, a, n)
    b = max(range(n), key=da.__getitem__)
    return _center_from_sweep(da, pa, b)


def _ecc_python(t):
    n, adj = t.n, t.adjacency
    if n == 1:
        return [0]
    c = find_center(t)
    dist, parent, order = _bfs(adj, c, n)
    down = [0] * n
    for v in reversed(order):
        p = parent[v]
        if p >= 0 and down[v] >= down[p]:
            down[p] = down[v] + 1
    # two tallest branches at the center; -1 stands for "no other branch"
    best = second = -1
    best_branch = -1
    for ci in adj[c]:
        r = down[ci]
        if r > best:
            second, best, best_branch = best, r, ci
        elif r > second:
            second = r
    branch = [-1] * n
    for ci in adj[c]:
        branch[ci] = ci
    ecc = [0] * n
    ecc[c] = 1 + best
    for v in order[1:]:
        b = branch[v]
        if b < 0:
            b = branch[v] = branch[parent[v]]
        ecc[v] = dist[v] + 1 + (second if b == best_branch else best)
    return ecc


def _csr(t):
    from itertools import chain

    deg = np.fromiter(t.degrees, dtype=np.int64, count=t.n)
    indptr = np.zeros(t.n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indices = np.fromiter(chain.from_iterable(t.adjacency), dtype=np.int32, count=int(indptr[-1]))
    return deg, indptr, indices


def _ecc_vector(t):
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import breadth_first_order, connected_components

    n = t.n
    deg, indptr, indices = _csr(t)
    # adjacency is symmetric already, so directed traversal avoids a copy
    g = csr_matrix((np.ones(indices.size, dtype=np.int8), indices, indptr), shape=(n, n))

    # the last vertex in breadth-first order is a farthest one
    a = int(breadth_first_order(g, 0, directed=True, return_predecessors=False)[-1])
    order_a, pred_a = breadth_first_order(g, a, directed=True)
    pred = pred_a.tolist()
    diameter_path = [int(order_a[-1])]
    while diameter_path[-1] != a:
        diameter_path.append(pred[diameter_path[-1]])
    diam = len(diameter_path) - 1
    c = diameter_path[diam // 2]
    if diam % 2:
        c = min(c, diameter_path[diam // 2 + 1])

    order_c, pred_c = breadth_first_order(g, c, directed=True)
    pred = pred_c.tolist()
    depth = [0] * n
    for v in order_c.tolist()[1:]:
        depth[v] = depth[pred[v]] + 1
    dc = np.array(depth, dtype=np.int64)

    # branches at c are the components left after deleting c's edges
    keep = (indices != c).astype(np.int8)
    keep[indptr[c] : indptr[c + 1]] = 0
    g_cut = csr_matrix((keep, indices, indptr), shape=(n, n))
    g_cut.eliminate_zeros()
    _, label = connected_components(g_cut, directed=True, connection="weak")
    height = np.full(label.max() + 1, -1, dtype=np.int64)
    np.maximum.at(height, label, dc - 1)
    height[label[c]] = -1
    top = np.argsort(height)[::-1]
    best, best_label = int(height[top[0]]), int(top[0])
    second = int(height[top[1]]) if height.size > 1 else -1
    ecc = dc + 1 + np.where(label == best_label, second, best)
    ecc[c] = 1 + best
    return ecc


def eccentricities_linear(t, *, vectorized=None):
    """Eccentricity profile in O(n) via the center decomposition.

    ``vectorized`` forces the numpy route (True) or the pure-Python route
    (False); by default large trees use numpy.
    """
    if vectorized is None:
        vectorized = t.n >= VECTOR_THRESHOLD
    if vectorized and t.n > 2:
        return EccProfile.from_ecc(_ecc_vector(t).tolist())
    return EccProfile.from_ecc(_ecc_python(t))


def xi_linear(t, *, vectorized=None):
    if vectorized is None:
        vectorized = t.n >= VECTOR_THRESHOLD
    if vectorized and t.n > 2:
        ecc = _ecc_vector(t)
        return int(np.dot(np.fromiter(t.degrees, dtype=np.int64, count=t.n), ecc))
    return sum(map(int.__mul__, t.degrees, _ecc_python(t)))


# ---------------------------------------------------------------------------
# closed forms


def xi_path_closed(n):
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return (3 * (n - 1) ** 2 + 1) // 2


def xi_star_closed(n):
    # S_2 is P_2, whose value (2) does not follow 3(n-1)
    if n < 3:
        raise ParameterError(f"star formula needs n >= 3, got {n}")
    return 3 * (n - 1)


def xi_broom_closed(n, delta):
    if not 3 <= delta <= n - 2:
        raise ParameterError(f"broom formula needs 3 <= delta <= n-2, got n={n}, delta={delta}")
    return (3 * n * n - 2 * delta * n - 2 * n - delta * delta + 4 * delta) // 2
