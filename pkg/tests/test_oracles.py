"""
Tests for the exhaustive oracles and the tower arithmetic.
"""

import pytest

from ordpath import oracles
from ordpath.core import OrderedGraph, PathGraph, validate_induced_path
from ordpath.errors import BitBudgetExceeded, CapExceededError, PreconditionError
from ordpath.extremal import gen_example1, random_host
from ordpath.patterns import crossing_pair, single_edge


def test_longest_induced_path_small_hosts(triangle, four_cycle):
    assert oracles.longest_induced_path_exact(PathGraph.bare(5)).order == 5
    assert oracles.longest_induced_path_exact(triangle).vertices == (0, 1)
    assert oracles.longest_induced_path_exact(four_cycle).vertices == (0, 1, 3)


def test_longest_induced_path_is_induced():
    for seed in range(5):
        host = random_host(11, 0.3, seed)
        path = oracles.longest_induced_path_exact(host)
        validate_induced_path(host, path.vertices)
        assert path.order >= oracles.longest_increasing_induced_path_exact(host).order


def test_longest_increasing_path(four_cycle):
    path = oracles.longest_increasing_induced_path_exact(four_cycle)
    assert path.vertices == (0, 1, 3)
    assert path.increasing


def test_example1_longest_path_is_short():
    """The first extremal host is a half-graph, so its longest induced path has four vertices."""
    assert oracles.longest_induced_path_exact(gen_example1(12)).order == 4


def test_path_oracles_cap():
    with pytest.raises(CapExceededError):
        oracles.longest_induced_path_exact(PathGraph.bare(31))
    with pytest.raises(CapExceededError):
        oracles.longest_increasing_induced_path_exact(PathGraph.bare(10), cap=5)


def test_iter_hosts_counts():
    assert oracles.chord_pairs(4) == [(0, 2), (0, 3), (1, 3)]
    assert len(list(oracles.iter_hosts(4))) == 8
    assert len(list(oracles.iter_hosts(2))) == 1


def test_ghn_single_edge():
    """Only the bare path avoids a single chord."""
    result = oracles.ghn_exact(single_edge(), 5, threads=1)
    assert result.value == 5
    assert result.count_avoiding == 1
    assert result.witness == PathGraph.bare(5)


def test_ghn_unavoidable_pattern():
    result = oracles.ghn_exact(OrderedGraph(2), 3, threads=1)
    assert result.unavoidable
    assert result.value is None
    assert result.to_dict()["witness_chords"] is None


def test_ghn_thread_independence():
    one = oracles.ghn_exact(crossing_pair(), 6, threads=1)
    two = oracles.ghn_exact(crossing_pair(), 6, threads=2)
    assert one.to_dict() == two.to_dict()


def test_ghn_errors():
    with pytest.raises(PreconditionError):
        oracles.ghn_exact(single_edge(), 0)
    with pytest.raises(CapExceededError):
        oracles.ghn_exact(single_edge(), 9)


def test_contains_ktt(four_cycle):
    assert oracles.contains_ktt(four_cycle, 1).to_dict() == {"side_a": [0], "side_b": [1]}
    witness = oracles.contains_ktt(four_cycle, 2)
    assert (witness.side_a, witness.side_b) == ((0, 3), (1, 2))
    assert oracles.contains_ktt(PathGraph.bare(5), 2) is None
    with pytest.raises(CapExceededError):
        oracles.contains_ktt(four_cycle, 4)


def test_tower():
    assert oracles.tower(5) == 5
    assert oracles.tower(2, 3) == 8
    assert oracles.tower(2, 2, 2) == 16
    assert oracles.tower(1, 50, 50) == 1
    with pytest.raises(BitBudgetExceeded):
        oracles.tower(2, 2, 2, 2, 2, budget=1000)


@pytest.mark.parametrize("q, N, k, value", [(1, 4, 3, 1), (2, 3, 3, 4), (2, 4, 3, 2 ** 32), (2, 3, 2, 8)])
def test_ramsey_upper(q, N, k, value):
    assert oracles.ramsey_upper(q, N, k) == value


def test_ramsey_upper_over_budget():
    estimate = oracles.ramsey_upper(10, 10, 3)
    assert isinstance(estimate, oracles.TowerEstimate)
    assert estimate.to_dict()["exceeded"]


def test_ramsey_rejects_bad_parameters():
    with pytest.raises(PreconditionError):
        oracles.ramsey_upper(2, 2, 3)
