from collections import Counter

import pytest

from ecctree.descriptor import eccentricities_linear, xi_broom_closed, xi_linear
from ecctree.errors import ParameterError
from ecctree.families import (
    FAMILY_KINDS,
    FamilySpec,
    balanced_legs,
    balanced_starlike,
    broom,
    build,
    diameter_tree,
    matching_tree,
    matching_tree_printed_legs,
    path,
    second_broom,
    star,
    starlike,
    volkmann,
    volkmann_layout,
)
from ecctree.tree_core import bfs_distances, canonical_code, has_perfect_matching


def iso(a, b):
    return canonical_code(a) == canonical_code(b)


def test_path_and_star():
    assert path(2) == star(2)
    assert path(10).max_degree == 2
    assert star(10).max_degree == 9
    assert xi_linear(path(11)) == 150
    with pytest.raises(ParameterError):
        star(1)
    with pytest.raises(ParameterError):
        path(0)


def test_starlike():
    t = starlike([2, 2, 2])
    assert t.n == 7 and t.degree(0) == 3
    assert xi_linear(t) == 36
    assert xi_linear(starlike([2, 1, 1])) == 19
    for bad in ([], [0], [2, -1]):
        with pytest.raises(ParameterError):
            starlike(bad)


def test_broom():
    b = broom(11, 6)
    assert sorted(b.degrees, reverse=True) == [6, 2, 2, 2, 2] + [1] * 6
    assert xi_linear(b) == 98 == xi_broom_closed(11, 6)
    for n in range(3, 31):
        assert iso(broom(n, 2), path(n))
        assert iso(broom(n, n - 1), star(n))
    for n in range(4, 15):
        for d in range(2, n):
            t = broom(n, d)
            assert iso(t, starlike([n - d] + [1] * (d - 1)))
            assert t.max_degree == d
            assert t.pendant_count == d
    with pytest.raises(ParameterError):
        broom(5, 5)


def test_second_broom():
    assert second_broom(6, 3) == starlike([2, 2, 1])
    assert xi_linear(second_broom(6, 3)) == 29
    with pytest.raises(ParameterError):
        second_broom(6, 4)


def test_matching_tree():
    t = matching_tree(8, 3)
    assert t == starlike([4, 2, 1])
    assert has_perfect_matching(t)
    assert xi_linear(t) == 63
    assert matching_tree(10, 5) == starlike([2, 2, 2, 2, 1])
    assert iso(matching_tree(10, 2), path(10))
    for n in range(4, 31, 2):
        for d in range(2, n // 2 + 1):
            t = matching_tree(n, d)
            assert t.n == n and t.max_degree == d and has_perfect_matching(t)
    with pytest.raises(ParameterError) as info:
        matching_tree(9, 3)
    assert info.value.code == "PARITY"
    with pytest.raises(ParameterError):
        matching_tree(8, 5)


def test_printed_matching_legs_are_two_short():
    for n in range(6, 21, 2):
        for d in range(2, n // 2):
            assert 1 + sum(matching_tree_printed_legs(n, d)) == n - 2


def test_balanced_starlike():
    assert balanced_starlike(7, 3) == starlike([2, 2, 2])
    t = balanced_starlike(6, 3)
    assert t == starlike([2, 2, 1]) and xi_linear(t) == 29
    legs = balanced_legs(20, 7)
    assert max(legs) - min(legs) <= 1 and sum(legs) == 19
    assert legs == sorted(legs, reverse=True)
    for bad in [(6, 2), (6, 5)]:
        with pytest.raises(ParameterError):
            balanced_starlike(*bad)


def test_volkmann_figure_shape():
    t = volkmann(21, 4)
    depth = bfs_distances(t, 0)
    assert t.degree(0) == 4
    by_level = Counter(depth)
    assert [by_level[k] for k in range(4)] == [1, 4, 12, 4]
    level1 = [v for v in range(21) if depth[v] == 1]
    assert all(t.degree(v) == 4 for v in level1)
    level2 = sorted(v for v in range(21) if depth[v] == 2)
    parents_of_last = sorted(
        next(u for u in t.adjacency[v] if depth[u] == 2) for v in range(21) if depth[v] == 3
    )
    assert parents_of_last == [level2[0]] * 3 + [level2[1]]
    assert volkmann_layout(21, 4).k == 2 and volkmann_layout(21, 4).leftover == 4


def test_volkmann_values_and_degrees():
    assert xi_linear(volkmann(13, 6)) == 72
    assert xi_linear(volkmann(20, 4)) == 156
    for n in range(2, 40):
        assert iso(volkmann(n, 2), path(n))
        for d in range(2, n + 2):
            t = volkmann(n, d)
            assert t.max_degree == min(d, n - 1)
            depth = bfs_distances(t, 0)
            last = max(depth)
            if last >= 2:
                odd = [v for v in range(n) if depth[v] == last - 1 and t.degree(v) not in (1, d)]
                assert len(odd) <= 1


def test_volkmann_monotone_in_degree():
    for n in range(11, 21):
        for d in range(3, n):
            assert xi_linear(volkmann(n, d - 1)) >= xi_linear(volkmann(n, d))


def test_diameter_tree():
    assert diameter_tree(4, 3, 0) == path(4)
    t = diameter_tree(5, 3, 1)
    assert iso(t, starlike([2, 1, 1])) and xi_linear(t) == 19
    for n in range(4, 16):
        for d in range(2, n):
            extra = n - d - 1
            codes = set()
            for s in range(extra + 1):
                u = diameter_tree(n, d, s)
                assert u.n == n and eccentricities_linear(u).diameter == d
                codes.add(canonical_code(u))
            if d % 2 == 0:
                assert len(codes) == 1
    with pytest.raises(ParameterError):
        diameter_tree(5, 3, 2)


def test_build_registry():
    assert set(FAMILY_KINDS) >= {"path", "star", "broom", "volkmann", "starlike"}
    assert build("broom", 11, 6) == broom(11, 6)
    assert build("starlike", 2, 1, 1) == starlike([2, 1, 1])
    assert FamilySpec("volkmann", (13, 6)).build() == volkmann(13, 6)
    with pytest.raises(ParameterError):
        build("caterpillar", 5)
    with pytest.raises(ParameterError):
        build("broom", 5)
