"""Exhaustive generation of unlabeled trees.

Free trees come out as level sequences rooted at a center (Wright, Richmond,
Odlyzko and McKay): rooted trees are walked in decreasing lexicographic
order with the Beyer-Hedetniemi successor, and a sequence is kept only when
its root is a center and, for a bicentral tree, the root is the canonical
one of the two centers. Runs of rooted trees that cannot qualify are skipped
in one step.

Labeled trees from Prufer sequences serve as an independent oracle for the
counts.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, fields
from itertools import product

from .errors import EnumerationLimitError
from .tree_core import Tree, has_perfect_matching

__all__ = [
    "ClassFilter",
    "MAX_ENUM_N",
    "free_level_sequences",
    "level_sequence_parents",
    "tree_from_level_sequence",
    "free_trees",
    "filtered_trees",
    "prufer_decode",
    "labeled_tree_oracle",
]

MAX_ENUM_N = 22
MAX_LABELED_N = 9


def _guard(n, limit, force=False):
    if n < 1:
        raise EnumerationLimitError(f"n must be >= 1, got {n}", "PARAM_OUT_OF_RANGE")
    if n > limit and not force:
        raise EnumerationLimitError(f"n = {n} exceeds the enumeration cap {limit}")


def _rooted_successor(seq, p=None):
    """Next rooted level sequence in decreasing order, or None after the star."""
    if p is None:
        p = len(seq) - 1
        while seq[p] <= 1:
            p -= 1
            if p == 0:
                return None
    target = seq[p] - 1
    q = p - 1
    while seq[q] != target:
        q -= 1
    nxt = seq[:p]
    shift = p - q
    for i in range(p, len(seq)):
        nxt.append(nxt[i - shift])
    return nxt


def _first_subtree_end(seq):
    # index of the second depth-1 vertex: the first subtree spans 1..m-1
    m = 2
    n = len(seq)
    while m < n and seq[m] != 1:
        m += 1
    return m


def _is_free_canonical(seq, m):
    left = seq[1:m]
    rest = seq[m:]
    left_height = max(left) - 1
    rest_height = max(rest) if rest else 0
    if rest_height != left_height:
        return rest_height > left_height
    # bicentral: keep the rooting whose far side is not the larger one
    if len(left) != len(rest) + 1:
        return len(left) < len(rest) + 1
    return [x - 1 for x in left] <= [0] + rest


def free_level_sequences(n, *, force=False):
    """Yield center-rooted level sequences, one per unlabeled tree on n vertices."""
    _guard(n, MAX_ENUM_N, force)
    if n <= 3:
        yield [0, 1, 1][:n]
        return
    seq = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        m = _first_subtree_end(seq)
        if _is_free_canonical(seq, m):
            yield seq
            seq = _rooted_successor(seq)
        else:
            # nothing that only rewrites the part after the first subtree can
            # repair it, so advance inside the first subtree directly
            deep_tail = seq[m - 1] > 2
            seq = _rooted_successor(seq, m - 1)
            if deep_tail:
                # largest tail that can match the new first subtree's height:
                # end the sequence with a chain as tall as that subtree
                h = max(seq[1 : _first_subtree_end(seq)]) - 1
                seq[n - h - 1 :] = range(1, h + 2)


def level_sequence_parents(seq):
    parents = [-1] * len(seq)
    last = [0] * (max(seq) + 1)
    for i in range(1, len(seq)):
        d = seq[i]
        parents[i] = last[d - 1]
        last[d] = i
    return parents


def tree_from_level_sequence(seq):
    # preorder ids: the parent always precedes its children, so neighbour
    # lists built in id order come out sorted
    n = len(seq)
    nbrs = [[] for _ in range(n)]
    last = [0] * (max(seq) + 1)
    for i in range(1, n):
        d = seq[i]
        p = last[d - 1]
        nbrs[i].append(p)
        nbrs[p].append(i)
        last[d] = i
    return Tree(n, tuple(map(tuple, nbrs)))


def free_trees(n, *, force=False, partition=None):
    """Yield every unlabeled tree on ``n`` vertices exactly once.

    ``partition=(k, parts)`` keeps only the trees whose position in the
    sequential stream is congruent to ``k`` modulo ``parts``.
    """
    if partition is None:
        for seq in free_level_sequences(n, force=force):
            yield tree_from_level_sequence(seq)
        return
    k, parts = partition
    for i, seq in enumerate(free_level_sequences(n, force=force)):
        if i % parts == k:
            yield tree_from_level_sequence(seq)


@dataclass(frozen=True)
class ClassFilter:
    """Conjunction of tree-class predicates; ``None`` leaves a field open."""

    max_degree: int | None = None
    max_degree_at_most: int | None = None
    pendant_count: int | None = None
    radius: int | None = None
    diameter: int | None = None
    perfect_matching: bool | None = None

    def matches(self, t):
        if self.max_degree is not None or self.max_degree_at_most is not None:
            delta = t.max_degree
            if self.max_degree is not None and delta != self.max_degree:
                return False
            if self.max_degree_at_most is not None and delta > self.max_degree_at_most:
                return False
        if self.pendant_count is not None and t.pendant_count != self.pendant_count:
            return False
        if self.perfect_matching is not None and has_perfect_matching(t) != self.perfect_matching:
            return False
        if self.radius is not None or self.diameter is not None:
            from .descriptor import eccentricities_linear

            prof = eccentricities_linear(t)
            if self.radius is not None and prof.radius != self.radius:
                return False
            if self.diameter is not None and prof.diameter != self.diameter:
                return False
        return True

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self) if getattr(self, f.name) is not None}


def filtered_trees(n, f=None, *, force=False, partition=None):
    f = f or ClassFilter()
    for t in free_trees(n, force=force, partition=partition):
        if f.matches(t):
            yield t


def prufer_decode(seq, n):
    """Labeled tree for a Prufer sequence of length n-2 (heap-based, O(n log n))."""
    if n == 1:
        return Tree(1, ((),))
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    nbrs = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    return Tree(n, tuple(tuple(sorted(x)) for x in nbrs))


def labeled_tree_oracle(n):
    """All n^(n-2) labeled trees on vertices 0..n-1."""
    _guard(n, MAX_LABELED_N)
    for seq in product(range(n), repeat=max(n - 2, 0)):
        yield prufer_decode(seq, n)
