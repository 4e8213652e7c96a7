"""Tree surgeries whose effect on xi^c has a known sign.

* two-path shifts: move one (or two) vertices from the shorter of two pendant
  paths at ``w`` to the longer one; xi^c goes up.
* delta transform: at a junction of pendant paths, re-hang all but the
  longest path one step closer to the rest of the tree; xi^c goes down.
* leaf rotation: move the deepest leaf to the shallowest vertex with spare
  degree; xi^c does not go up.

All functions return new trees; inputs are never modified.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from .descriptor import eccentricities_linear, find_center
from .errors import ParameterError, TransformError
from .tree_core import Tree, bfs_distances

__all__ = [
    "TwoPathAnchor",
    "attach_two_paths",
    "shift_one",
    "shift_two",
    "pendant_path_length",
    "DeltaPlan",
    "delta_plan",
    "delta_transform",
    "delta_candidate",
    "Rotation",
    "rotate_leaf",
]


@dataclass(frozen=True)
class TwoPathAnchor:
    """A base tree ``G`` with pendant paths of lengths ``p >= q`` to hang at ``w``."""

    base: Tree
    w: int
    p: int
    q: int

    def __post_init__(self):
        if self.base.n < 2:
            raise ParameterError("the base tree must have at least two vertices")
        if not 0 <= self.w < self.base.n:
            raise ParameterError(f"anchor {self.w} is not a vertex of the base tree")
        if not self.p >= self.q >= 0:
            raise ParameterError(f"need p >= q >= 0, got p={self.p}, q={self.q}")


def attach_two_paths(a):
    """G(p, q): base ids unchanged, then the p-path, then the q-path, each outward from w."""
    edges = a.base.edges()
    nxt = a.base.n
    for length in (a.p, a.q):
        prev = a.w
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree.from_edges(nxt, edges)


def shift_one(a):
    """G(p+1, q-1)."""
    if a.q < 1:
        raise ParameterError(f"shift_one needs q >= 1, got q={a.q}")
    return attach_two_paths(replace(a, p=a.p + 1, q=a.q - 1))


def shift_two(a):
    """G(p+2, q-2); keeps the parity of both paths, hence a perfect matching."""
    if a.q < 2:
        raise ParameterError(f"shift_two needs q >= 2, got q={a.q}")
    return attach_two_paths(replace(a, p=a.p + 2, q=a.q - 2))


def pendant_path_length(t, v, x):
    """Length of the pendant path entered from ``v`` through ``x``, or None.

    The branch at ``x`` counts as a pendant path when it is a chain of
    degree-2 vertices ending in a leaf.
    """
    adj = t.adjacency
    prev, cur, length = v, x, 1
    while len(adj[cur]) == 2:
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
        length += 1
    return length if len(adj[cur]) == 1 else None


class DeltaPlan(NamedTuple):
    v: int
    w: int
    moved: tuple  # (start vertex, leg length) for each re-hung path
    kept: tuple  # the longest leg, which stays at v


def delta_plan(t, v, w=None):
    """Work out which legs a delta transform at ``v`` moves and where.

    ``w`` defaults to the single neighbour of ``v`` that does not start a
    pendant path; if every neighbour starts one, the longest leg's neighbour
    plays ``w``.
    """
    if not 0 <= v < t.n:
        raise ParameterError(f"{v} is not a vertex")
    legs = {x: pendant_path_length(t, v, x) for x in t.adjacency[v]}
    if w is None:
        others = [x for x, length in legs.items() if length is None]
        if len(others) > 1:
            raise TransformError(f"vertex {v} has {len(others)} non-path branches", "NOT_A_PATH_JUNCTION")
        if others:
            w = others[0]
        else:
            if len(legs) < 2:
                raise TransformError(f"vertex {v} has no neighbour to re-hang paths on", "NO_ANCHOR_NEIGHBOR")
            ranked = sorted(legs.items(), key=lambda kv: (-kv[1], kv[0]))
            if ranked[0][1] == ranked[1][1]:
                raise TransformError(
                    f"vertex {v} is a pure path junction with no unique longest leg", "NO_ANCHOR_NEIGHBOR"
                )
            w = ranked[0][0]
    elif w not in legs:
        raise TransformError(f"{w} is not adjacent to {v}", "NO_ANCHOR_NEIGHBOR")
    paths = [(x, length) for x, length in legs.items() if x != w]
    if not paths or any(length is None for _, length in paths):
        raise TransformError(f"branches at {v} away from {w} are not all pendant paths", "NOT_A_PATH_JUNCTION")
    paths.sort(key=lambda xl: (xl[1], xl[0]))
    return DeltaPlan(v, w, tuple(paths[:-1]), paths[-1])


def delta_transform(t, v, w=None):
    """Move the m-1 shortest pendant paths at ``v`` over to ``w``."""
    plan = delta_plan(t, v, w)
    moved = {x for x, _ in plan.moved}
    edges = []
    for a, b in t.edges():
        if a == v and b in moved:
            edges.append((plan.w, b))
        elif b == v and a in moved:
            edges.append((plan.w, a))
        else:
            edges.append((a, b))
    return Tree.from_edges(t.n, edges)


def delta_candidate(t):
    """The vertex the monotonicity argument works on, with its anchor.

    Root at a center; take the branching vertex (degree >= 3) farthest from
    it, smallest id on ties. Returns ``(v, parent)`` or None when that
    vertex is central or no branching vertex exists.
    """
    root = find_center(t)
    prof = eccentricities_linear(t)
    dist = bfs_distances(t, root)
    branching = [x for x in range(t.n) if t.degree(x) >= 3]
    if not branching:
        return None
    v = min(branching, key=lambda x: (-dist[x], x))
    if v in prof.center:
        return None
    parent = next(x for x in t.adjacency[v] if dist[x] == dist[v] - 1)
    return v, parent


class Rotation(NamedTuple):
    tree: Tree
    u: int
    v: int
    w: int
    ecc_tie: bool  # ecc(v) == ecc(u); xi^c still never rises, and usually drops


def rotate_leaf(t):
    """Re-hang the deepest leaf ``w`` (neighbour ``v``) on the shallowest ``u`` with deg(u) < max degree.

    Depth is measured from a center (smaller id when bicentral); ties go to
    the smaller vertex id. Returns None when no admissible move exists:
    no such ``u``, ``u`` already adjacent to ``w``, or ecc(v) < ecc(u).
    """
    if t.n < 3:
        return None
    root = find_center(t)
    dist = bfs_distances(t, root)
    delta = t.max_degree
    leaves = [x for x in range(t.n) if t.degree(x) == 1]
    w = min(leaves, key=lambda x: (-dist[x], x))
    (v,) = t.adjacency[w]
    spare = [x for x in range(t.n) if x != w and t.degree(x) < delta]
    if not spare:
        return None
    u = min(spare, key=lambda x: (dist[x], x))
    if u == v:
        return None
    ecc = eccentricities_linear(t).ecc
    if ecc[v] < ecc[u]:
        return None
    edges = [e for e in t.edges() if e != (min(v, w), max(v, w))]
    edges.append((u, w))
    return Rotation(Tree.from_edges(t.n, edges), u, v, w, ecc[v] == ecc[u])
