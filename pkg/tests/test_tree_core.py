from itertools import combinations

import pytest
from hypothesis import given

from conftest import all_trees, trees
from ecctree.errors import TreeParseError
from ecctree.families import path, star
from ecctree.tree_core import (
    Tree,
    canonical_code,
    ecc_profile_oracle,
    has_perfect_matching,
    parse_forest,
    parse_tree,
    serialize_forest,
    serialize_tree,
    tree_centers,
)


def test_parse_smallest_and_path():
    assert parse_tree("2\n0 1") == path(2)
    assert parse_tree("4\n0 1\n1 2\n2 3") == path(4)
    assert parse_tree("\n4\n\n0 1\n1 2\n  2 3  \n\n") == path(4)


@pytest.mark.parametrize(
    "text, code",
    [
        ("4\n0 1\n1 2\n1 3\n2 3", "WRONG_EDGE_COUNT"),
        ("3\n0 1\n0 1", "DUPLICATE_EDGE"),
        ("3\n0 1\n1 0", "DUPLICATE_EDGE"),
        ("4\n0 1\n1 0\n2 3", "DUPLICATE_EDGE"),
        ("4\n0 1\n0 2\n1 2", "DISCONNECTED"),
        ("3\n0 1\n1 3", "BAD_VERTEX_ID"),
        ("3\n0 1\n-1 2", "BAD_VERTEX_ID"),
        ("3\n0 1\n1 1", "SELF_LOOP"),
        ("", "MALFORMED"),
        ("3\n0 1 2\n1 2", "MALFORMED"),
        ("x\n0 1", "MALFORMED"),
        ("0", "MALFORMED"),
    ],
)
def test_parse_errors(text, code):
    with pytest.raises(TreeParseError) as info:
        parse_tree(text)
    assert info.value.code == code


def test_serialize():
    assert serialize_tree(path(2)) == "2\n0 1"
    assert serialize_tree(star(4)) == "4\n0 1\n0 2\n0 3"
    assert serialize_tree(Tree.from_edges(1, [])) == "1"


@given(trees())
def test_round_trip(t):
    assert parse_tree(serialize_tree(t)) == t


def test_forest_round_trip():
    forest = list(all_trees(6))
    text = serialize_forest(forest)
    assert "\n\n\n" not in text
    assert parse_forest(text) == forest


def test_profiles_by_hand():
    p = ecc_profile_oracle(path(4))
    assert (list(p.ecc), p.radius, p.diameter, p.center) == ([3, 2, 2, 3], 2, 3, (1, 2))
    s = ecc_profile_oracle(star(5))
    assert (list(s.ecc), s.radius, s.diameter, s.center) == ([1, 2, 2, 2, 2], 1, 2, (0,))
    one = ecc_profile_oracle(Tree.from_edges(1, []))
    assert (one.ecc, one.radius, one.diameter, one.center) == ((0,), 0, 0, (0,))


@given(trees())
def test_degree_sum_and_adjacent_eccentricities(t):
    assert sum(t.degrees) == 2 * (t.n - 1)
    ecc = ecc_profile_oracle(t).ecc
    assert all(abs(ecc[u] - ecc[v]) <= 1 for u, v in t.edges())


@given(trees())
def test_centers_agree_with_profile(t):
    assert tree_centers(t) == ecc_profile_oracle(t).center


def _matching_brute_force(t):
    k = t.n // 2
    if t.n % 2:
        return False
    for chosen in combinations(t.edges(), k):
        covered = {x for e in chosen for x in e}
        if len(covered) == t.n:
            return True
    return False


def test_matching_examples():
    assert has_perfect_matching(path(4))
    assert not has_perfect_matching(star(4))


@pytest.mark.parametrize("n", range(1, 11))
def test_matching_agrees_with_brute_force(n):
    for t in all_trees(n):
        assert has_perfect_matching(t) == _matching_brute_force(t)


def test_canonical_code_relabeling():
    a = path(4)
    b = Tree.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_code(a) == canonical_code(b)
    assert canonical_code(a) != canonical_code(star(4))


@given(trees(min_n=2, max_n=12))
def test_canonical_code_survives_permutation(t):
    perm = list(reversed(range(t.n)))
    u = Tree.from_edges(t.n, [(perm[a], perm[b]) for a, b in t.edges()])
    assert canonical_code(u) == canonical_code(t)


def test_oracle_routes_agree(rng):
    from conftest import random_tree

    for n in (2, 3, 7, 60, 250, 900):
        for _ in range(5):
            t = random_tree(rng, n)
            assert ecc_profile_oracle(t, dense=True) == ecc_profile_oracle(t, dense=False)
    for t in (path(1), path(600), star(400)):
        assert ecc_profile_oracle(t, dense=True) == ecc_profile_oracle(t, dense=False)


def test_code_routes_partition_alike():
    from ecctree.tree_core import _rooted_code, _rooted_code_small

    for n in (9, 10):
        big = {min(_rooted_code(t, c) for c in tree_centers(t)) for t in all_trees(n)}
        small = {min(_rooted_code_small(t, c) for c in tree_centers(t)) for t in all_trees(n)}
        assert len(big) == len(small) == len(all_trees(n))


def test_large_tree_code_survives_permutation(rng):
    from conftest import random_tree

    for _ in range(5):
        t = random_tree(rng, 300)
        perm = list(range(300))
        rng.shuffle(perm)
        u = Tree.from_edges(300, [(perm[a], perm[b]) for a, b in t.edges()])
        assert canonical_code(u) == canonical_code(t)
