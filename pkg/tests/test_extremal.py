"""
Tests for the host generators.
"""

from collections import Counter

import pytest

from ordpath.core import PathGraph
from ordpath.errors import PreconditionError
from ordpath.extremal import (
    complete_host,
    gen_alternating_biclique,
    gen_example1,
    gen_example2,
    gen_spread_biclique_host,
    random_host,
)
from ordpath.patterns import contains_pattern, gen_ordered_biclique, ordered_path


def test_example1_chords():
    assert gen_example1(6) == PathGraph.of(6, [(0, 3), (0, 5), (2, 5)])


def test_example2_orders():
    assert gen_example2(1).n == 1
    assert gen_example2(2) == PathGraph.of(5, [(0, 2), (0, 4)])
    assert gen_example2(3).n == 13


def test_random_host_is_seeded():
    a = random_host(12, 0.2, seed=7)
    b = random_host(12, 0.2, seed=7)
    assert a == b
    assert random_host(8, 0.0, seed=1) == PathGraph.bare(8)
    assert random_host(8, 1.0, seed=1) == complete_host(8)


def test_random_host_rejects_bad_density():
    with pytest.raises(PreconditionError):
        random_host(5, 1.5, seed=0)


def test_alternating_biclique():
    assert gen_alternating_biclique(2) == PathGraph.of(4, [(0, 3)])
    assert len(gen_alternating_biclique(3).chords) == 4


def test_spread_biclique_contains_ordered_biclique():
    """Any ordering of K_{4,4} contains a K_{2,2} with one side first."""
    for seed in range(5):
        host = gen_spread_biclique_host(4, seed)
        assert host.n == 15
        assert len(host.chords) == 16
        assert contains_pattern(host, gen_ordered_biclique(2)) is not None


def test_complete_host():
    assert complete_host(4) == PathGraph.of(4, [(0, 2), (0, 3), (1, 3)])


@pytest.mark.parametrize("n", range(2, 21))
def test_example1_avoids_ordered_p3(n):
    """Even vertices only have later neighbors among chords, odd vertices only earlier ones."""
    assert contains_pattern(gen_example1(n), ordered_path(3)) is None


@pytest.mark.parametrize("i", range(1, 6))
def test_example2_has_at_most_one_back_chord(i):
    host = gen_example2(i)
    back = Counter(j for _, j in host.chords)
    assert max(back.values(), default=0) <= 1
