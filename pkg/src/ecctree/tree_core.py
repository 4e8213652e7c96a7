"""Tree representation, slow reference invariants, canonical codes, text I/O.

Vertices are dense integers ``0..n-1``. A :class:`Tree` never changes after
construction; every surgery elsewhere in the package builds a new one.

The eccentricity routine here is the deliberately naive one (a breadth-first
search from every vertex). It is the oracle the linear method in
:mod:`ecctree.descriptor` is checked against, so keep it simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import TreeParseError

__all__ = [
    "Tree",
    "EccProfile",
    "parse_tree",
    "serialize_tree",
    "parse_forest",
    "serialize_forest",
    "bfs_distances",
    "ecc_profile_oracle",
    "has_perfect_matching",
    "tree_centers",
    "canonical_code",
]


@dataclass(frozen=True, eq=False)
class Tree:
    """An unrooted tree stored as sorted neighbour tuples.

    Use :meth:`from_edges` for untrusted input; the plain constructor
    assumes ``adjacency`` is already a valid, symmetric, sorted tree.
    """

    n: int
    adjacency: tuple

    @classmethod
    def from_edges(cls, n, edges):
        """Validate ``edges`` and build the tree.

        Raises :class:`TreeParseError` with the failing check as ``code``.
        """
        edges = list(edges)
        if n < 1:
            raise TreeParseError(f"vertex count must be >= 1, got {n}", "MALFORMED")
        if len(edges) != n - 1:
            raise TreeParseError(
                f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}",
                "WRONG_EDGE_COUNT",
            )
        nbrs = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeParseError(f"edge {u} {v} has a vertex outside 0..{n - 1}", "BAD_VERTEX_ID")
            if u == v:
                raise TreeParseError(f"self-loop at vertex {u}", "SELF_LOOP")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise TreeParseError(f"duplicate edge {key[0]} {key[1]}", "DUPLICATE_EDGE")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        tree = cls(n, tuple(tuple(sorted(a)) for a in nbrs))
        if n > 1 and min(bfs_distances(tree, 0)) < 0:
            raise TreeParseError("edge list is not connected", "DISCONNECTED")
        return tree

    @classmethod
    def from_parents(cls, parents):
        """Build from a parent array where ``parents[root] == -1``.

        No validation beyond what the construction itself implies; callers
        must pass a genuine rooted forest with a single root.
        """
        n = len(parents)
        nbrs = [[] for _ in range(n)]
        for v, p in enumerate(parents):
            if p >= 0:
                nbrs[v].append(p)
                nbrs[p].append(v)
        return cls(n, tuple(tuple(sorted(a)) for a in nbrs))

    def degree(self, v):
        return len(self.adjacency[v])

    @cached_property
    def degrees(self):
        return tuple(map(len, self.adjacency))

    @property
    def max_degree(self):
        return max(self.degrees) if self.n > 1 else 0

    @property
    def pendant_count(self):
        return sum(1 for d in self.degrees if d == 1)

    def edges(self):
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        if self.n <= 12:
            return f"Tree(n={self.n}, edges={self.edges()})"
        return f"Tree(n={self.n})"


@dataclass(frozen=True)
class EccProfile:
    ecc: tuple
    radius: int
    diameter: int
    center: tuple

    @classmethod
    def from_ecc(cls, ecc):
        ecc = tuple(ecc)
        radius = min(ecc)
        return cls(ecc, radius, max(ecc), tuple(v for v, e in enumerate(ecc) if e == radius))


# ---------------------------------------------------------------------------
# text format


def parse_tree(text):
    """Parse an edge-list document: ``n`` on the first line, then ``u v`` lines.

    Blank lines and surrounding whitespace are ignored.
    """
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise TreeParseError("empty document", "MALFORMED")
    try:
        if len(lines[0]) != 1:
            raise ValueError
        n = int(lines[0][0])
        edges = []
        for ln in lines[1:]:
            if len(ln) != 2:
                raise ValueError
            edges.append((int(ln[0]), int(ln[1])))
    except ValueError:
        raise TreeParseError("expected 'n' then lines of 'u v' integers", "MALFORMED") from None
    return Tree.from_edges(n, edges)


def serialize_tree(t):
    return "\n".join([str(t.n)] + [f"{u} {v}" for u, v in t.edges()])


def parse_forest(text):
    """Split a multi-tree document on blank lines and parse each block."""
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append("\n".join(cur))
            cur = []
    if cur:
        blocks.append("\n".join(cur))
    return [parse_tree(b) for b in blocks]


def serialize_forest(trees):
    return "\n\n".join(serialize_tree(t) for t in trees) + "\n"


# ---------------------------------------------------------------------------
# slow reference invariants


def bfs_distances(t, source):
    """Distances from ``source``; unreachable vertices get -1."""
    adj = t.adjacency
    dist = [-1] * t.n
    dist[source] = 0
    queue = [source]
    for v in queue:
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


DENSE_RANGE = (200, 5000)


def ecc_profile_oracle(t, *, dense=None):
    """Eccentricities from all pairwise distances, O(n^2).

    Small trees run one breadth-first search per vertex. Mid-sized ones
    (``DENSE_RANGE``) fill the whole distance matrix with numpy instead,
    which is the same quadratic work without the interpreter overhead.
    """
    if dense is None:
        dense = DENSE_RANGE[0] <= t.n <= DENSE_RANGE[1]
    if dense:
        return EccProfile.from_ecc(_ecc_distance_matrix(t))
    return EccProfile.from_ecc(max(bfs_distances(t, v)) for v in range(t.n))


def _ecc_distance_matrix(t):
    # rows and columns in preorder, so every subtree is a column interval;
    # a child's row is its parent's row plus one, minus two on its own subtree
    n = t.n
    adj = t.adjacency
    parent = [-1] * n
    order = []
    stack = [0]
    parent[0] = 0
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    depth = [0] * n
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    dist = np.empty((n, n), dtype=np.int32)
    dist[0] = [depth[v] for v in order]
    for i in range(1, n):
        v = order[i]
        row = dist[i]
        np.add(dist[pos[parent[v]]], 1, out=row)
        row[i : i + size[v]] -= 2
    ecc = dist.max(axis=1)
    return [int(ecc[pos[v]]) for v in range(n)]


def _bfs_order(t, root):
    adj = t.adjacency
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    for v in order:
        for w in adj[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    parent[root] = -1
    return order, parent


def has_perfect_matching(t):
    """Greedy leaf matching: a leaf must pair with its only neighbour."""
    if t.n % 2:
        return False
    order, parent = _bfs_order(t, 0)
    matched = [False] * t.n
    for v in reversed(order):
        if matched[v]:
            continue
        p = parent[v]
        if p < 0 or matched[p]:
            return False
        matched[v] = matched[p] = True
    return True


def tree_centers(t):
    """Center vertices by repeatedly stripping leaves, O(n)."""
    n = t.n
    if n <= 2:
        return tuple(range(n))
    deg = list(t.degrees)
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(t, root):
    order, parent = _bfs_order(t, root)
    depth = [0] * t.n
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    # AHU: rank each vertex's multiset of child ranks, one depth level at a time
    rank = [0] * t.n
    children = [[] for _ in range(t.n)]
    by_depth = {}
    for v in order:
        by_depth.setdefault(depth[v], []).append(v)
    for d in sorted(by_depth, reverse=True):
        keys = {}
        for v in by_depth[d]:
            keys[v] = tuple(sorted(rank[c] for c in children[v]))
        labels = {k: i for i, k in enumerate(sorted(set(keys.values())))}
        for v in by_depth[d]:
            rank[v] = labels[keys[v]]
            if parent[v] >= 0:
                children[parent[v]].append(v)
    # emit the parenthesis string with children in rank order
    out = bytearray()
    stack = [(root, False)]
    while stack:
        v, closing = stack.pop()
        if closing:
            out += b")"
            continue
        out += b"("
        stack.append((v, True))
        for c in sorted(children[v], key=rank.__getitem__, reverse=True):
            stack.append((c, False))
    return bytes(out)


def _rooted_code_small(t, root):
    # plain AHU on strings: quadratic in the height, fastest for small trees
    order, parent = _bfs_order(t, root)
    kids = [[] for _ in range(t.n)]
    code = ""
    for v in reversed(order):
        k = kids[v]
        k.sort()
        code = "(" + "".join(k) + ")"
        if v != root:
            kids[parent[v]].append(code)
    return code.encode()


SMALL_CODE_N = 64


def canonical_code(t):
    """Isomorphism-invariant byte string for the unlabeled tree.

    Rooted at the center; for a bicentral tree the smaller of the two rooted
    codes is used. Codes are only comparable between trees of the same size:
    trees up to ``SMALL_CODE_N`` vertices order siblings by their code
    strings, larger ones by integer rank.
    """
    rooted = _rooted_code_small if t.n <= SMALL_CODE_N else _rooted_code
    return min(rooted(t, c) for c in tree_centers(t))
