import random
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from ecctree.enumeration import free_trees, prufer_decode


@lru_cache(maxsize=None)
def all_trees(n):
    return tuple(free_trees(n))


def random_tree(rng, n):
    return prufer_decode([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


@st.composite
def trees(draw, min_n=1, max_n=14):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return prufer_decode(seq, n)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
