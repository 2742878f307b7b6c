"""
Tests for the path family, triple colouring, clique lemmas, K_{t,t}
extraction and the path-or-biclique pipeline.
"""

from itertools import combinations

import pytest

from ordpath import ktt
from ordpath.core import KttWitness, PathGraph
from ordpath.errors import CapExceededError, PreconditionError
from ordpath.extremal import complete_host
from ordpath.oracles import contains_ktt, iter_hosts
from ordpath.verify import planted_biclique, planted_maps


def test_max_increasing_path_on_bare_path():
    assert ktt.max_increasing_induced_path(PathGraph.bare(5), 0, 4).vertices == (0, 1, 2, 3, 4)


def test_max_increasing_path_is_lexicographic(four_cycle):
    """(0,1,3) and (0,2,3) both have order 3; the smaller one wins."""
    assert ktt.max_increasing_induced_path(four_cycle, 0, 3).vertices == (0, 1, 3)


def test_max_increasing_path_rejects_bad_pair():
    with pytest.raises(PreconditionError):
        ktt.max_increasing_induced_path(PathGraph.bare(5), 3, 3)


def test_path_family_on_complete_host():
    family = ktt.path_family(complete_host(6))
    assert len(family) == 15
    assert all(path == pair for pair, path in family.items())


def test_path_family_cap():
    with pytest.raises(CapExceededError):
        ktt.path_family(PathGraph.bare(21))


def test_split_path():
    split = ktt.split_path((0, 1, 2, 3, 4), 1, 1)
    assert (split.left, split.mid, split.right) == ((0, 1), (2,), (3, 4))
    assert split.whole == (0, 1, 2, 3, 4)
    with pytest.raises(PreconditionError):
        ktt.split_path((0, 1, 2), 1, 1)


def test_colour_of_complete_host_triple():
    """Every subpath is a single edge, so u-v is the first shortcut found."""
    host = complete_host(5)
    colour = ktt.color_triple(host, ktt.path_family(host), (0, 2, 4))
    assert (colour.c1, colour.d, colour.delta, colour.drev, colour.deltarev) == (0, 0, 0, 0, 0)
    assert colour.c3 == (3, 0, 0)
    assert colour.edge == (0, 2)


def test_colour_rejects_unordered_triple():
    host = complete_host(5)
    with pytest.raises(PreconditionError):
        ktt.color_triple(host, ktt.path_family(host), (2, 1, 4))


def test_colouring_caches():
    colouring = ktt.TripleColouring(complete_host(5))
    first = colouring(0, 1, 2)
    assert colouring(0, 1, 2) is first


def test_monochromatic_clique_on_complete_host():
    record = ktt.find_monochromatic_3clique(complete_host(7), 7)
    assert record.vertices == tuple(range(7))
    assert record.interior == (1, 2, 3, 4, 5)
    assert record.type == (2, 0, 0)
    assert record.plus_marker == {v: v for v in range(1, 6)}
    assert record.minus_marker == {v: v for v in range(1, 6)}


def test_clique_search_edge_cases():
    with pytest.raises(PreconditionError):
        ktt.find_monochromatic_3clique(complete_host(5), 2)
    assert ktt.find_monochromatic_3clique(complete_host(5), 6) is None
    assert ktt.largest_monochromatic_3clique(complete_host(5)).vertices == (0, 1, 2, 3, 4)


def test_clique_lemmas_hold():
    host = complete_host(7)
    record = ktt.find_monochromatic_3clique(host, 7)
    report = ktt.verify_clique_lemmas(host, record, 4)
    assert report.preconditions_met
    assert report.passed, report.failed


def test_clique_lemmas_catch_swapped_markers():
    host = complete_host(7)
    record = ktt.find_monochromatic_3clique(host, 7)
    plus = dict(record.plus_marker)
    plus[2], plus[3] = plus[3], plus[2]
    broken = ktt.CliqueRecord(record.vertices, record.colour, record.ell, plus, dict(record.minus_marker))
    report = ktt.verify_clique_lemmas(host, broken, 4)
    assert not report.passed
    assert "markers_well_defined" in report.failed


def test_clique_lemmas_reject_malformed_record():
    host = complete_host(7)
    record = ktt.find_monochromatic_3clique(host, 7)
    bad = ktt.CliqueRecord((3, 1, 5), record.colour, record.ell)
    with pytest.raises(PreconditionError):
        ktt.verify_clique_lemmas(host, bad, 4)


def test_ktt_extract_from_mappings():
    host = complete_host(5)
    triple = (1, 3, 4)
    witness = ktt.ktt_extract(host, range(5), {triple: 0}, {triple: 2}, ktt.VARIANT_123, 1)
    assert witness == KttWitness((0,), (2,))


def test_ktt_extract_requires_injective_map():
    host = complete_host(7)
    with pytest.raises(PreconditionError):
        ktt.ktt_extract(host, range(7), lambda triple: 0, lambda triple: 6, ktt.VARIANT_123, 2)


def test_ktt_extract_rejects_unknown_variant():
    with pytest.raises(PreconditionError):
        ktt.ktt_extract(complete_host(5), range(5), {}, {}, "213", 1)


def test_s_from_n_is_zero_at_desk_scale():
    assert ktt.s_from_n(10 ** 6) == 0
    assert ktt.s_from_n(bits=4096, t=2) == 0
    with pytest.raises(PreconditionError):
        ktt.s_from_n()
    with pytest.raises(PreconditionError):
        ktt.s_from_n(10, bits=4)


def test_pipeline_finds_long_path():
    outcome = ktt.main_pipeline(PathGraph.bare(6), 1, s_override=3)
    assert outcome.stage == ktt.STAGE_PATH
    assert outcome.path.vertices == tuple(range(6))


def test_pipeline_default_threshold():
    """With s = 0 any host already has a long enough path."""
    assert ktt.main_pipeline(PathGraph.bare(1), 1).stage == ktt.STAGE_PATH


def test_pipeline_extracts_biclique():
    host = complete_host(7)
    outcome = ktt.main_pipeline(host, 1, s_override=3)
    assert outcome.stage == ktt.STAGE_KTT
    assert outcome.ktt == KttWitness((2,), (4,))
    assert outcome.ktt.is_valid(host)
    assert outcome.lemmas.passed
    assert outcome.to_dict()["ktt"] == outcome.ktt.to_dict()


def test_pipeline_reports_small_hosts():
    outcome = ktt.main_pipeline(complete_host(6), 1, s_override=3)
    assert outcome.stage == ktt.STAGE_RAMSEY
    assert outcome.certificate == {"required_clique_order": 7}
    assert outcome.clique.vertices == tuple(range(6))


@pytest.mark.parametrize("t", [2, 3])
@pytest.mark.parametrize("variant", [ktt.VARIANT_123, ktt.VARIANT_321, ktt.VARIANT_132])
def test_ktt_extract_on_planted_biclique(t, variant):
    host, side_a, side_b = planted_biclique(t)
    vs, f, f_prime = planted_maps(t, variant, side_a, side_b)
    witness = ktt.ktt_extract(host, vs, f, f_prime, variant, t)
    assert witness == KttWitness(side_a, side_b)
    assert witness.is_valid(host)
    assert contains_ktt(host, t) is not None


def test_planted_biclique_layout():
    host, side_a, side_b = planted_biclique(2)
    assert (host.n, side_a, side_b) == (7, (0, 4), (2, 6))
    assert host.sorted_chords() == [(0, 2), (0, 6), (2, 4), (4, 6)]


@pytest.mark.parametrize("t", [1, 2])
def test_pipeline_exhaustive_small_hosts(t):
    """n <= 7: no contradiction, and a K_{t,t} stage only where the oracle finds one."""
    stages = set()
    for n in range(2, 8):
        for host in iter_hosts(n):
            out = ktt.main_pipeline(host, t, s_override=3)
            stages.add(out.stage)
            assert out.stage != ktt.STAGE_CONTRADICTION
            if out.stage == ktt.STAGE_PATH:
                assert out.path.order >= 3
            if contains_ktt(host, t) is None:
                assert out.stage != ktt.STAGE_KTT
            if out.stage == ktt.STAGE_KTT:
                assert out.ktt.is_valid(host)
    assert ktt.STAGE_PATH in stages and ktt.STAGE_RAMSEY in stages


def _assert_colour_well_formed(host, family, triple, colour):
    u, v, w = triple
    assert 0 <= colour.c1 <= 4
    assert colour.delta in (-1, 0, 1) and colour.deltarev in (-1, 0, 1)
    assert 0 <= colour.c3[0] <= 5 and colour.c3[1] >= 0 and colour.c3[2] >= 0
    ell = len(family[(u, v)])
    if colour.c1 or colour.delta or colour.deltarev or ell < colour.d + colour.drev + 2:
        assert colour.c3 == (0, 0, 0)
    if colour.c3[0]:
        assert host.has_edge(*colour.edge)


def test_triple_colours_well_formed_exhaustive():
    """Every triple of every host with n <= 7, plus the colour-count bound."""
    for n in range(3, 8):
        for host in iter_hosts(n):
            family = ktt.path_family(host)
            colouring = ktt.TripleColouring(host, family)
            colours = set()
            for triple in combinations(range(n), 3):
                colour = colouring(*triple)
                _assert_colour_well_formed(host, family, triple, colour)
                colours.add(colour)
            s = max(len(p) for p in family.values()) + 1
            assert len(colours) <= 5 * (3 * s) ** 2 * (5 * s ** 2 + 1) <= 10 ** 3 * s ** 4
