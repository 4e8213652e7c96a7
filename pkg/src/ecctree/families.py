"""Constructors for the named tree families.

Labeling conventions (vertex 0 is always the root/hub where one exists):

* ``path(n)``: 0-1-...-(n-1).
* ``star(n)``: hub 0.
* ``starlike(legs)``: hub 0, then each leg's vertices outward from the hub,
  legs in the order given.
* ``volkmann(n, delta)``: breadth-first ids.
* ``diameter_tree(n, d, s)``: spine 0..d, pendants d+1.. (first ``s`` on the
  lower middle spine vertex).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .tree_core import Tree

__all__ = [
    "FamilySpec",
    "VolkmannLayout",
    "FAMILY_KINDS",
    "path",
    "star",
    "starlike",
    "broom",
    "second_broom",
    "matching_tree",
    "matching_tree_printed_legs",
    "balanced_starlike",
    "balanced_legs",
    "volkmann_layout",
    "volkmann",
    "diameter_tree",
    "build",
]


def _check(cond, message, code="PARAM_OUT_OF_RANGE"):
    if not cond:
        raise ParameterError(message, code)


def path(n):
    _check(n >= 1, f"path needs n >= 1, got {n}")
    return Tree.from_parents([-1] + list(range(n - 1)))


def star(n):
    _check(n >= 2, f"star needs n >= 2, got {n}")
    return Tree.from_parents([-1] + [0] * (n - 1))


def starlike(legs):
    """Hub with one pendant path per entry of ``legs``."""
    legs = list(legs)
    _check(len(legs) >= 1 and all(x >= 1 for x in legs), f"legs must be >= 1, got {legs}")
    parents = [-1]
    for length in legs:
        parents.append(0)
        for _ in range(length - 1):
            parents.append(len(parents) - 1)
    return Tree.from_parents(parents)


def broom(n, delta):
    """Star on ``delta + 1`` vertices with a handle out of one of its leaves."""
    _check(2 <= delta <= n - 1, f"broom needs 2 <= delta <= n-1, got n={n}, delta={delta}")
    return starlike([n - delta] + [1] * (delta - 1))


def second_broom(n, delta):
    _check(3 <= delta <= n - 3, f"second broom needs 3 <= delta <= n-3, got n={n}, delta={delta}")
    return starlike([n - delta - 1, 2] + [1] * (delta - 2))


def matching_tree_printed_legs(n, delta):
    """Leg list exactly as printed for A_{n,delta}; it sums to n-3, not n-1."""
    return [n - 2 * delta, *([2] * (delta - 2)), 1]


def matching_tree(n, delta):
    """Starlike tree with legs ``[n-2*delta+2, 2, ..., 2, 1]`` (delta-2 twos).

    Has a perfect matching and maximum degree ``delta``; ``delta == 2``
    gives the path.
    """
    _check(n % 2 == 0, f"matching tree needs even n, got {n}", "PARITY")
    _check(2 <= delta <= n // 2, f"matching tree needs 2 <= delta <= n/2, got n={n}, delta={delta}")
    return starlike([n - 2 * delta + 2] + [2] * (delta - 2) + [1])


def balanced_legs(n, p):
    q, extra = divmod(n - 1, p)
    return [q + 1] * extra + [q] * (p - extra)


def balanced_starlike(n, p):
    _check(2 < p < n - 1, f"balanced starlike needs 2 < p < n-1, got n={n}, p={p}")
    return starlike(balanced_legs(n, p))


@dataclass(frozen=True)
class VolkmannLayout:
    """``k`` full levels below the root, ``leftover`` vertices beyond them."""

    k: int
    leftover: int


def volkmann_layout(n, delta):
    _check(n >= 1 and delta >= 2, f"bad Volkmann parameters n={n}, delta={delta}")
    k, total, level = 0, 1, delta
    while total + level <= n:
        total += level
        k += 1
        level *= delta - 1
        if level == 0:
            break
    return VolkmannLayout(k, n - total)


def volkmann(n, delta):
    """Breadth-first tree: root gets ``delta`` children, others ``delta - 1``.

    The last level is packed left to right, so at most one vertex on the
    level above it has a degree other than ``delta`` or 1.
    """
    _check(n >= 2 and delta >= 2, f"Volkmann tree needs n >= 2, delta >= 2, got n={n}, delta={delta}")
    parents = [-1]
    for i in range(1, n):
        parents.append(0 if i <= delta else 1 + (i - delta - 1) // (delta - 1))
    return Tree.from_parents(parents)


def diameter_tree(n, d, at_floor):
    """Spine of length ``d`` with ``n - d - 1`` pendants on its middle vertex or vertices."""
    _check(2 <= d <= n - 1, f"diameter tree needs 2 <= d <= n-1, got n={n}, d={d}")
    extra = n - d - 1
    _check(0 <= at_floor <= extra, f"at_floor must lie in 0..{extra}, got {at_floor}")
    lo, hi = d // 2, (d + 1) // 2
    parents = [-1] + list(range(d))
    parents += [lo] * at_floor + [hi] * (extra - at_floor)
    return Tree.from_parents(parents)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()

    def build(self):
        return build(self.kind, *self.params)


_BUILDERS = {
    "path": path,
    "star": star,
    "starlike": lambda *legs: starlike(legs),
    "broom": broom,
    "second_broom": second_broom,
    "balanced_starlike": balanced_starlike,
    "matching_tree": matching_tree,
    "volkmann": volkmann,
    "diameter_tree": diameter_tree,
}
FAMILY_KINDS = tuple(_BUILDERS)


def build(kind, *params):
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise ParameterError(f"unknown family {kind!r}; expected one of {', '.join(FAMILY_KINDS)}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {kind}: {exc}") from None
