"""
Property suites behind `cli.py verify`.

Each suite is a list of named checks; a check returns (passed, detail).
Quick mode shrinks every exhaustive range so the whole run stays interactive.
"""

import logging
import math
import time
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Callable, Dict, List

import networkx as nx

from . import extremal, ktt, oracles, patterns, solvers
from .core import (
    PathGraph,
    parse_ordered_graph,
    parse_path_graph,
    serialize_ordered_graph,
    serialize_path_graph,
    validate_induced_path,
    max_span,
)
from .errors import InvalidPathError, OrdpathError

logger = logging.getLogger(__name__)

SUITE_NAMES = ("core", "patterns", "solvers", "ktt", "oracles")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.results],
        }


@dataclass(frozen=True)
class VerifyOptions:
    quick: bool = False
    corrupt: bool = False
    threads: int = 1
    seed: int = 2024

    def pick(self, full, quick):
        return quick if self.quick else full


def catalog() -> Dict[str, "patterns.OrderedGraph"]:
    """The named patterns shipped in catalog/."""
    out = {
        "single_edge": patterns.single_edge(),
        "M": patterns.crossing_pair(),
        "nested": patterns.nested_pair(),
        "P3": patterns.ordered_path(3),
        "H": patterns.OrderedGraph(6, frozenset({(0, 3), (1, 4), (2, 5)})),
        "H_hat": patterns.gen_planar_pattern(),
        "pi_K4": patterns.gen_pi(nx.complete_graph(4)),
        "pi_K33": patterns.gen_pi(nx.complete_bipartite_graph(3, 3)),
    }
    for i in range(1, 4):
        out[f"M{i}"] = patterns.gen_Mi(i)
    for m in range(2, 6):
        out[f"halfgraph{m}"] = patterns.gen_halfgraph_pattern(m)
    return out


def _crossing_free(host):
    return not any(a < b < c < d for (a, c), (b, d) in combinations(host.sorted_chords(), 2))


def _random_hosts(count, sizes, seed):
    rng = extremal.make_rng(seed)
    for k in range(count):
        n = int(sizes[k % len(sizes)])
        density = float(rng.uniform(0.1, 0.6))
        yield extremal.random_host(n, density, int(rng.integers(0, 2 ** 31)))


# ---------------------------------------------------------------------------
# core
# ---------------------------------------------------------------------------

def check_canonical_formats(opts):
    bad = []
    for name, h in catalog().items():
        if parse_ordered_graph(serialize_ordered_graph(h)) != h:
            bad.append(name)
    for n in range(3, opts.pick(12, 8)):
        host = extremal.gen_example1(n)
        text = serialize_path_graph(host)
        if parse_path_graph(text) != host or serialize_path_graph(parse_path_graph(text)) != text:
            bad.append(f"example1({n})")
    return not bad, {"mismatches": bad}


def check_path_validation(opts):
    host = extremal.gen_example1(10)
    try:
        validate_induced_path(host, range(10))
        rejected = False
    except InvalidPathError:
        rejected = True
    accepted = validate_induced_path(host, (0, 1, 2)).order == 3
    return rejected and accepted, {"rejects_shortcut": rejected, "accepts_short_path": accepted}


# ---------------------------------------------------------------------------
# patterns
# ---------------------------------------------------------------------------

def check_mi_depth(opts):
    depths = {i: patterns.depth(patterns.gen_Mi(i)) for i in range(1, opts.pick(6, 4))}
    return all(d == i for i, d in depths.items()), {"depths": depths}


def check_pi_sizes(opts):
    h = patterns.gen_pi(nx.complete_graph(4))
    return (h.n, len(h.edges)) == (12, 6), {"vertices": h.n, "edges": len(h.edges)}


def check_transformation_sizes(opts):
    bad = []
    for name, h in catalog().items():
        if patterns.hat(h).n != h.n + 2 or len(patterns.hat(h).edges) != len(h.edges) + 1:
            bad.append(f"hat({name})")
        if patterns.concat(h, h).n != 2 * h.n:
            bad.append(f"concat({name})")
        stripped = patterns.strip_isolated(h)
        if stripped.n != sum(1 for v in range(h.n) if h.degree(v)):
            bad.append(f"strip({name})")
        if patterns.is_matching(h) and h.n:
            k = 2
            if patterns.plus_h(h, k).n != k * (h.n - 1) + h.n:
                bad.append(f"plus_h({name})")
    return not bad, {"failures": bad}


def check_halfgraph_index(opts):
    checked = 0
    for n in range(1, opts.pick(7, 5)):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            h = patterns.OrderedGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))
            checked += 1
            if (patterns.halfgraph_index(h) is not None) != patterns.one_sided(h):
                return False, {"n": n, "edges": [list(e) for e in h.sorted_edges()]}
    return True, {"patterns": checked}


def check_biclique_reduction(opts):
    target = patterns.gen_ordered_biclique(2)
    found = [patterns.contains_pattern(extremal.gen_alternating_biclique(4), target) is not None]
    for seed in range(opts.pick(100, 10)):
        host = extremal.gen_spread_biclique_host(4, seed, extra_density=0.1)
        found.append(patterns.contains_pattern(host, target) is not None)
    return all(found), {"hosts": len(found), "found": sum(found)}


# ---------------------------------------------------------------------------
# solvers
# ---------------------------------------------------------------------------

def check_span_path(opts):
    worst = None
    for n in range(2, opts.pick(9, 6)):
        for host in oracles.iter_hosts(n):
            path = solvers.span_path(host)
            if path.order * max_span(host) < n:
                worst = host.sorted_chords()
                return False, {"n": n, "chords": [list(c) for c in worst]}
    return True, {}


def check_crossing_free(opts):
    checked = 0
    for n in range(2, opts.pick(9, 7)):
        for host in oracles.iter_hosts(n):
            if not _crossing_free(host):
                continue
            left, right = solvers.solve_crossing_free(host)
            checked += 1
            if left.order + right.order < math.ceil(math.log2(n)) or left.vertices[0] != 0 \
                    or right.vertices[-1] != n - 1 or left.vertices[-1] >= right.vertices[0]:
                return False, {"n": n, "chords": [list(c) for c in host.sorted_chords()]}
    return True, {"hosts": checked}


def check_noncrossing(opts):
    checked = 0
    for h in (patterns.single_edge(), patterns.nested_pair()):
        for n in range(2, opts.pick(9, 7)):
            for host in oracles.iter_hosts(n):
                out = solvers.solve_noncrossing(host, h)
                avoids = patterns.contains_pattern(host, h) is None
                checked += 1
                if avoids and (out.kind != solvers.PATH
                               or out.path.order < solvers.noncrossing_guarantee(n, h)):
                    return False, {"n": n, "chords": [list(c) for c in host.sorted_chords()]}
    return True, {"hosts": checked}


def check_gap_or_path(opts):
    h = patterns.crossing_pair()
    unmet = checked = 0

    def hosts():
        for n in range(3, opts.pick(9, 7)):
            yield from oracles.iter_hosts(n)
        yield from _random_hosts(opts.pick(500, 40), (9, 10), opts.seed)

    for host in hosts():
        for m, t in ((3, 2), (5, 2), (3, 3)):
            if m > host.n:
                continue
            out = solvers.find_gap_or_path(host, h, m, t)
            checked += 1
            need = math.ceil(host.n / (m * t))
            if out.kind == solvers.WITNESS:
                ok = out.witness.gap >= need
            elif out.provenance == "gap/precondition-unmet":
                unmet += 1
                ok = (oracles.longest_induced_path_exact(host).order < t
                      and patterns.contains_pattern_with_gap(host, h, need) is None)
            else:
                ok = out.path.order >= t
            if not ok:
                return False, {"n": host.n, "m": m, "t": t, "chords": [list(c) for c in host.sorted_chords()]}
    return True, {"runs": checked, "neither_exists": unmet}


def check_isolated_matching(opts):
    h = patterns.plus_h(patterns.crossing_pair(), 1)
    checked = 0
    for host in _random_hosts(opts.pick(60, 10), (16, 32, 64), opts.seed + 4):
        out = solvers.solve_matching(host, h)
        checked += 1
        if out.kind == solvers.PATH and out.path.order < solvers.matching_guarantee(host.n, h):
            return False, {"n": host.n, "order": out.path.order}
    value = solvers.matching_guarantee(1024, h)
    return value > 1, {"hosts": checked, "guarantee_1024": value}


def check_grs(opts):
    seen = {}
    hosts = [PathGraph.bare(16)] + [extremal.gen_example1(n) for n in range(8, opts.pick(13, 10))]
    for host in hosts:
        out = solvers.grs_search(host, 4)
        seen[out.kind] = seen.get(out.kind, 0) + 1
        if out.kind == solvers.WITNESS and out.pattern != patterns.gen_halfgraph_pattern(1):
            return False, {"n": host.n, "pattern_mismatch": True}
        if out.kind == solvers.PATH and out.path.order < 4:
            return False, {"n": host.n, "order": out.path.order}
    return True, {"outcomes": seen}


# ---------------------------------------------------------------------------
# ktt
# ---------------------------------------------------------------------------

def corrupted(record):
    """Swap the plus markers of the first two interior vertices."""
    interior = record.interior
    plus = dict(record.plus_marker)
    if len(interior) >= 2 and interior[0] in plus and interior[1] in plus:
        plus[interior[0]], plus[interior[1]] = plus[interior[1]], plus[interior[0]]
    else:
        plus[interior[0]] = record.vertices[-1]
    return replace(record, plus_marker=plus)


def check_clique_lemmas(opts):
    s = 4
    checked = 0
    corrupt_pending = opts.corrupt
    hosts = [extremal.complete_host(n) for n in range(7, 10)]
    hosts += list(_random_hosts(opts.pick(1000, 30), (6, 7, 8, 9, 10), opts.seed + 1))
    for host in hosts:
        family = ktt.path_family(host)
        if max(len(p) for p in family.values()) >= s:
            continue
        record = ktt.find_monochromatic_3clique(host, s, ktt.TripleColouring(host, family))
        if record is None:
            continue
        if corrupt_pending:
            record, corrupt_pending = corrupted(record), False
        report = ktt.verify_clique_lemmas(host, record, s, family)
        checked += 1
        if report.preconditions_met and not report.passed:
            return False, {"clique": list(record.vertices), "failed": report.failed}
    return True, {"cliques": checked}


def _colour_ok(host, family, triple, colour):
    u, v, _ = triple
    guarded = colour.c1 or colour.delta or colour.deltarev \
        or len(family[(u, v)]) < colour.d + colour.drev + 2
    if guarded and colour.c3 != (0, 0, 0):
        return False
    return not colour.c3[0] or host.has_edge(*colour.edge)


def check_colour_well_formed(opts):
    worst = 0
    for n in range(3, opts.pick(8, 6)):
        for host in oracles.iter_hosts(n):
            family = ktt.path_family(host)
            colouring = ktt.TripleColouring(host, family)
            colours = set()
            for triple in combinations(range(n), 3):
                colour = colouring(*triple)
                if not _colour_ok(host, family, triple, colour):
                    return False, {"n": n, "triple": list(triple), "colour": colour.to_dict(),
                                   "chords": [list(c) for c in host.sorted_chords()]}
                colours.add(colour)
            s = max(len(p) for p in family.values()) + 1
            if len(colours) > 10 ** 3 * s ** 4:
                return False, {"n": n, "colours": len(colours), "s": s}
            worst = max(worst, len(colours))
    return True, {"most_colours": worst}


def check_pipeline(opts):
    counts = {}
    hosts = [PathGraph.bare(8), extremal.gen_example1(9), extremal.complete_host(9)]
    hosts += list(_random_hosts(opts.pick(200, 20), (7, 8, 9), opts.seed + 2))
    for host in hosts:
        for t in (1, 2):
            out = ktt.main_pipeline(host, t, s_override=3)
            counts[out.stage] = counts.get(out.stage, 0) + 1
            if out.stage == ktt.STAGE_CONTRADICTION:
                return False, {"n": host.n, "chords": [list(c) for c in host.sorted_chords()]}
            if out.stage == ktt.STAGE_KTT and not out.ktt.is_valid(host):
                return False, {"n": host.n, "invalid_ktt": out.ktt.to_dict()}
    return True, {"stages": counts}


def check_pipeline_exhaustive(opts):
    counts = {}
    for n in range(2, opts.pick(8, 6)):
        for host in oracles.iter_hosts(n):
            for t in (1, 2):
                out = ktt.main_pipeline(host, t, s_override=3)
                counts[out.stage] = counts.get(out.stage, 0) + 1
                has_ktt = oracles.contains_ktt(host, t) is not None
                if out.stage == ktt.STAGE_CONTRADICTION or (out.stage == ktt.STAGE_KTT and not has_ktt):
                    return False, {"n": n, "t": t, "stage": out.stage,
                                   "chords": [list(c) for c in host.sorted_chords()]}
    return True, {"stages": counts}


def planted_biclique(t):
    """Host on 4t-1 vertices whose chords are exactly a K_{t,t} between positions 0 mod 4 and 2 mod 4."""
    side_a = tuple(range(0, 4 * t, 4))
    side_b = tuple(range(2, 4 * t, 4))
    chords = [(min(a, b), max(a, b)) for a in side_a for b in side_b]
    return PathGraph.of(4 * t - 1, chords), side_a, side_b


def planted_maps(t, variant, side_a, side_b):
    """Triple maps on vertices 0..2t+2 that ktt_extract should turn into (side_a, side_b)."""
    vs = list(range(2 * t + 3))
    z1, xs, z2, ys, z3 = vs[0], vs[1:t + 1], vs[t + 1], vs[t + 2:2 * t + 2], vs[2 * t + 2]
    layout = {
        ktt.VARIANT_123: lambda i, j: (xs[i], ys[j], z3),
        ktt.VARIANT_321: lambda i, j: (z1, xs[i], ys[j]),
        ktt.VARIANT_132: lambda i, j: (xs[i], z2, ys[j]),
    }[variant]
    f, f_prime = {}, {}
    for i in range(t):
        for j in range(t):
            # 321 reads side A along Y and side B along X
            a, b = (j, i) if variant == ktt.VARIANT_321 else (i, j)
            f[layout(i, j)], f_prime[layout(i, j)] = side_a[a], side_b[b]
    return vs, f, f_prime


def check_planted_bicliques(opts):
    for t in (2, 3):
        host, side_a, side_b = planted_biclique(t)
        for variant in (ktt.VARIANT_123, ktt.VARIANT_321, ktt.VARIANT_132):
            vs, f, f_prime = planted_maps(t, variant, side_a, side_b)
            witness = ktt.ktt_extract(host, vs, f, f_prime, variant, t)
            if (witness.side_a, witness.side_b) != (side_a, side_b) or oracles.contains_ktt(host, t) is None:
                return False, {"t": t, "variant": variant, "ktt": witness.to_dict()}
    return True, {"t": [2, 3]}


def check_s_from_n(opts):
    values = [ktt.s_from_n(n, 1) for n in (1, 2, 10 ** 6, 2 ** 64)]
    started = time.perf_counter()
    big = ktt.s_from_n(bits=10 ** 6, t=2)
    fast = time.perf_counter() - started < 1.0
    monotone = all(a <= b for a, b in zip(values, values[1:]))
    return monotone and fast, {"values": values, "bits_1e6": big}


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def check_ghn_single_edge(opts):
    values = {n: oracles.ghn_exact(patterns.single_edge(), n, 1).value for n in range(2, opts.pick(8, 6))}
    return all(v == n for n, v in values.items()), {"values": values}


def check_example1(opts):
    orders = {n: oracles.longest_induced_path_exact(extremal.gen_example1(n)).order
              for n in range(6, opts.pick(21, 13))}
    return all(o == 4 for o in orders.values()), {"orders": orders}


def check_ghn_lower_bounds(opts):
    values = {}
    for n in range(4, opts.pick(9, 7)):
        m_value = oracles.ghn_exact(patterns.crossing_pair(), n, opts.threads).value
        nested = patterns.nested_pair()
        nested_value = oracles.ghn_exact(nested, n, opts.threads).value
        values[n] = {"M": m_value, "nested": nested_value}
        if m_value < math.ceil(0.5 * math.log2(n)) or nested_value < solvers.noncrossing_guarantee(n, nested):
            return False, {"values": values}
    return True, {"values": values}


def check_thread_independence(opts):
    n = opts.pick(7, 5)
    for h in (patterns.crossing_pair(), patterns.single_edge()):
        one = oracles.ghn_exact(h, n, 1)
        many = oracles.ghn_exact(h, n, max(2, opts.threads))
        if one.to_dict() != many.to_dict():
            return False, {"pattern": sorted(h.edges), "n": n}
    return True, {"n": n}


def _naive_longest(host):
    g = nx.Graph(host.all_edges())
    g.add_nodes_from(range(host.n))
    best = 1
    for k in range(host.n, 1, -1):
        for nodes in combinations(range(host.n), k):
            sub = g.subgraph(nodes)
            if sub.number_of_edges() == k - 1 and nx.is_connected(sub) and max(d for _, d in sub.degree()) <= 2:
                return k
    return best


def check_longest_path_naive(opts):
    for host in _random_hosts(opts.pick(100, 15), (5, 6, 7, 8), opts.seed + 3):
        exact = oracles.longest_induced_path_exact(host).order
        increasing = oracles.longest_increasing_induced_path_exact(host).order
        if exact != _naive_longest(host) or increasing > exact:
            return False, {"chords": [list(c) for c in host.sorted_chords()], "exact": exact}
    return True, {}


def check_ramsey(opts):
    got = [oracles.ramsey_upper(1, 4, 3), oracles.ramsey_upper(2, 3, 3), oracles.ramsey_upper(2, 4, 3)]
    return got == [1, 4, 2 ** 32], {"values": [str(v) for v in got]}


SUITES: Dict[str, List[Callable]] = {
    "core": [check_canonical_formats, check_path_validation],
    "patterns": [check_mi_depth, check_pi_sizes, check_transformation_sizes, check_halfgraph_index,
                 check_biclique_reduction],
    "solvers": [check_span_path, check_crossing_free, check_noncrossing, check_gap_or_path,
                check_isolated_matching, check_grs],
    "ktt": [check_colour_well_formed, check_clique_lemmas, check_pipeline, check_pipeline_exhaustive,
            check_planted_bicliques, check_s_from_n],
    "oracles": [check_ghn_single_edge, check_example1, check_ghn_lower_bounds,
                check_thread_independence, check_longest_path_naive, check_ramsey],
}


def run_suite(name: str, opts: VerifyOptions = VerifyOptions()) -> List[SuiteReport]:
    """
    Run one suite, or every suite for name "all".

    Raises:
        KeyError: unknown suite name
    """
    names = SUITE_NAMES if name == "all" else (name,)
    reports = []
    for suite in names:
        checks = SUITES[suite]
        report = SuiteReport(suite)
        logger.info(f"🔍 verify {suite}: {len(checks)} checks{' (quick)' if opts.quick else ''}")
        for check in checks:
            started = time.perf_counter()
            try:
                passed, detail = check(opts)
            except OrdpathError as e:
                passed, detail = False, {"error": f"{type(e).__name__}: {e}"}
            elapsed = (time.perf_counter() - started) * 1000
            result = CheckResult(check.__name__.replace("check_", ""), passed, detail, elapsed)
            report.results.append(result)
            mark = "✅" if passed else "❌"
            logger.info(f"{mark} {suite}.{result.name} ({elapsed:.0f} ms)")
        reports.append(report)
    return reports
