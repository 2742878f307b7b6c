"""
Tests for pattern containment, predicates, classification and generators.
"""

from itertools import combinations

import networkx as nx
import pytest

from ordpath.core import OrderedGraph, PathGraph, embeds, read_pattern_file
from ordpath.errors import PreconditionError
from ordpath.extremal import gen_alternating_biclique, random_host
from ordpath.oracles import iter_hosts
from ordpath import patterns
from ordpath.patterns import (
    classify,
    concat,
    contains_pattern,
    contains_pattern_with_gap,
    crossing_pair,
    decompose,
    depth,
    describe,
    gen_halfgraph_pattern,
    gen_Mi,
    gen_ordered_biclique,
    gen_outerplanar_matching,
    gen_pi,
    halfgraph_host,
    halfgraph_index,
    hat,
    is_hat,
    lift_halfgraph_embedding,
    nested_pair,
    one_sided,
    ordered_path,
    plus_h,
    single_edge,
    split_concatenation,
    split_point,
    strip_isolated,
)
from ordpath.verify import catalog


def test_crossing_pair_in_four_cycle(four_cycle):
    emb = contains_pattern(four_cycle, crossing_pair())
    assert emb.positions == (0, 1, 2, 3)
    assert emb.gap == 1


def test_bare_path_avoids_every_edge_pattern():
    assert contains_pattern(PathGraph.bare(10), single_edge()) is None


def test_empty_pattern_is_always_contained():
    assert contains_pattern(PathGraph.bare(1), OrderedGraph(0)).positions == ()


def test_gap_restricted_search():
    host = PathGraph.of(7, [(0, 4), (2, 6)])
    assert contains_pattern_with_gap(host, crossing_pair(), 2).positions == (0, 2, 4, 6)
    assert contains_pattern_with_gap(host, crossing_pair(), 3) is None
    with pytest.raises(PreconditionError):
        contains_pattern_with_gap(host, crossing_pair(), 0)


def test_halfgraph_host_contains_itself():
    emb = contains_pattern(halfgraph_host(3), gen_halfgraph_pattern(3))
    assert emb.positions == tuple(range(6))


def test_depth_and_decompose():
    assert depth(nested_pair()) == 2
    a, b = decompose(nested_pair())
    assert a == single_edge()
    assert b == OrderedGraph(0)
    with pytest.raises(PreconditionError):
        decompose(crossing_pair())


@pytest.mark.parametrize("i, size", [(1, 6), (2, 24), (3, 78)])
def test_mi_size_and_depth(i, size):
    m = gen_Mi(i)
    assert m.n == size
    assert depth(m) == i


def test_split_point_and_one_sided():
    assert split_point(gen_ordered_biclique(2)) == 1
    assert split_point(ordered_path(3)) is None
    assert one_sided(gen_halfgraph_pattern(4))
    assert not one_sided(ordered_path(3))


@pytest.mark.parametrize("h, expected", [
    (crossing_pair(), {"lower": "polylog", "d": 1, "upper": "log"}),
    (nested_pair(), {"lower": "polynomial", "d": 2, "upper": "linear"}),
    (ordered_path(3), {"lower": "bounded", "upper": "log"}),
    (gen_ordered_biclique(2), {"lower": "loglog", "upper": "none-known"}),
    (gen_halfgraph_pattern(4), {"lower": "logloglog", "upper": "log"}),
])
def test_classify(h, expected):
    assert classify(h).to_dict() == expected


def test_describe_reports_predicates():
    info = describe(nested_pair())
    assert info["matching"] and info["perfect_matching"]
    assert not info["crossing"]
    assert info["depth"] == 2
    assert describe(ordered_path(3))["halfgraph_index"] is None


def test_halfgraph_index_of_halfgraph():
    assert halfgraph_index(gen_halfgraph_pattern(3)) <= 3


def test_transformations():
    assert hat(single_edge()) == nested_pair()
    assert is_hat(nested_pair())
    assert concat(single_edge(), single_edge()) == OrderedGraph.of(4, [(0, 1), (2, 3)])
    spread = plus_h(crossing_pair(), 1)
    assert spread == OrderedGraph.of(7, [(0, 4), (2, 6)])
    assert strip_isolated(spread) == crossing_pair()
    with pytest.raises(PreconditionError):
        plus_h(ordered_path(3), 1)


def test_split_concatenation():
    assert split_concatenation(concat(crossing_pair(), nested_pair())) == (crossing_pair(), nested_pair())
    assert split_concatenation(nested_pair()) is None


def test_pi_of_k4():
    h = gen_pi(nx.complete_graph(4))
    assert (h.n, len(h.edges)) == (12, 6)
    assert patterns.is_perfect_matching(h)


def test_catalog_files_match_builders(catalog_dir):
    for name, h in catalog().items():
        assert read_pattern_file(catalog_dir / f"{name}.pat") == h, name


def test_genus_pattern_size():
    assert patterns.gen_genus_pattern(1).n == 16


def test_ordered_biclique_in_alternating_biclique():
    assert contains_pattern(gen_alternating_biclique(4), gen_ordered_biclique(2)) is not None


def test_lift_halfgraph_embedding():
    """A one-sided pattern on k vertices rides on any embedding of H_{4k}."""
    host = halfgraph_host(16)
    emb = lift_halfgraph_embedding(range(32), crossing_pair())
    assert emb.positions == (0, 8, 21, 29)
    assert embeds(host, crossing_pair(), emb.positions)
    with pytest.raises(PreconditionError):
        lift_halfgraph_embedding(range(32), ordered_path(3))


def test_outerplanar_matching():
    assert gen_outerplanar_matching(nx.cycle_graph(4), [0, 1, 2, 3]) == single_edge()
    with pytest.raises(PreconditionError):
        gen_outerplanar_matching(nx.complete_graph(4), [0, 1, 2, 3])


def test_to_networkx():
    g = patterns.to_networkx(crossing_pair())
    assert g.number_of_nodes() == 4 and g.number_of_edges() == 2


def test_gap_threshold_on_single_chord():
    host = PathGraph.of(8, [(0, 4)])
    assert contains_pattern_with_gap(host, single_edge(), 4).positions == (0, 4)
    assert contains_pattern_with_gap(host, single_edge(), 5) is None


def _patterns_up_to(max_n):
    """Every ordered graph on 1..max_n vertices."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield OrderedGraph(n, frozenset(pair for b, pair in enumerate(pairs) if mask >> b & 1))


def _first_embedding(host, h):
    for positions in combinations(range(host.n), h.n):
        if embeds(host, h, positions):
            return positions
    return None


@pytest.mark.parametrize("h", [
    single_edge(),
    crossing_pair(),
    nested_pair(),
    ordered_path(3),
    gen_ordered_biclique(2),
    plus_h(single_edge(), 1),
])
def test_contains_pattern_matches_brute_force(h):
    """Exhaustive for n <= 6, seeded random hosts for n = 7, 8."""
    hosts = [host for n in range(2, 7) for host in iter_hosts(n)]
    hosts += [random_host(n, density, seed) for n in (7, 8) for density in (0.2, 0.4, 0.6) for seed in range(10)]
    for host in hosts:
        emb = contains_pattern(host, h)
        assert (emb.positions if emb is not None else None) == _first_embedding(host, h), host.sorted_chords()


def test_halfgraph_index_small_cases():
    assert halfgraph_index(crossing_pair()) == 3
    assert halfgraph_index(single_edge()) == 2
    assert halfgraph_index(ordered_path(3)) is None


def test_halfgraph_index_present_iff_one_sided():
    """All patterns on at most 6 vertices; presence is decided by the search."""
    for h in _patterns_up_to(6):
        assert (halfgraph_index(h) is not None) == one_sided(h), h.sorted_edges()
