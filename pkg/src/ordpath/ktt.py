"""
Triple colourings of maximum increasing induced paths, monochromatic
3-cliques and the K_{t,t} extraction they force.

For u < v, P_{u,v} is a maximum-order increasing induced path from u to v.
Ordered triples (u, v, w) are coloured by comparing P_{u,v}, P_{u,w} and
P_{v,w}; a large monochromatic clique either yields K_{t,t} or a longer
increasing induced path, which contradicts maximality.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Optional, Sequence, Tuple

from . import config
from .core import InducedPath, KttWitness, PathGraph
from .errors import (
    BitBudgetExceeded,
    CapExceededError,
    InternalInvariantError,
    PreconditionError,
)
from .oracles import tower

logger = logging.getLogger(__name__)

PathFamily = Dict[Tuple[int, int], Tuple[int, ...]]

STAGE_PATH = "path"
STAGE_KTT = "ktt"
STAGE_CONTRADICTION = "contradiction-certified"
STAGE_RAMSEY = "ramsey-precondition-unmet"

VARIANT_123 = "123"
VARIANT_321 = "321"
VARIANT_132 = "132"

# which extraction layout each non-zero first entry of the third colour uses
VARIANT_FOR_CASE = {1: VARIANT_321, 2: VARIANT_123, 3: VARIANT_123, 4: VARIANT_321, 5: VARIANT_132}


# ---------------------------------------------------------------------------
# Maximum increasing induced paths
# ---------------------------------------------------------------------------

def _better(a, b):
    return b is None or len(a) > len(b) or (len(a) == len(b) and a < b)


class _MaxPathSearch:
    """Maximum increasing induced paths ending at a fixed vertex v."""

    def __init__(self, host: PathGraph, v: int):
        self.host = host
        self.v = v
        self.window = (1 << (v + 1)) - 1
        self.memo = {}

    def best(self, x, blocked, use_memo):
        if x == self.v:
            return (x,)
        key = (x, blocked)
        if use_memo and key in self.memo:
            return self.memo[key]
        out = None
        adj = self.host.adjacency
        for y in self.host.forward_neighbors(x):
            if y > self.v:
                break
            if blocked >> y & 1:
                continue
            mask = (blocked | adj[x]) & self.window & ~((1 << (y + 1)) - 1)
            sub = self.best(y, mask, use_memo)
            if sub is not None and _better((x,) + sub, out):
                out = (x,) + sub
        if use_memo:
            self.memo[key] = out
        return out


def max_increasing_induced_path(host: PathGraph, u: int, v: int) -> InducedPath:
    """
    P_{u,v}: a maximum-order increasing induced path from u to v.

    Args:
        host: host graph
        u: first vertex
        v: last vertex, u < v

    Returns:
        InducedPath of order at least 2, lexicographically smallest among maxima
    """
    if not 0 <= u < v < host.n:
        raise PreconditionError(f"need 0 <= u < v < n, got u={u}, v={v}, n={host.n}")
    search = _MaxPathSearch(host, v)
    return InducedPath(search.best(u, 0, v - u + 1 <= config.MEMO_CAP), True)


def path_family(host: PathGraph) -> PathFamily:
    """P_{u,v} for every pair u < v, sharing one memo table per endpoint v."""
    if host.n > config.KTT_CAP:
        raise CapExceededError(f"path families are capped at n={config.KTT_CAP}, host has n={host.n}")
    family = {}
    for v in range(1, host.n):
        search = _MaxPathSearch(host, v)
        for u in range(v):
            family[(u, v)] = search.best(u, 0, v - u + 1 <= config.MEMO_CAP)
    return family


@dataclass(frozen=True)
class SplitTriple:
    """P_{u,v} cut into its first d+1, middle and last drev+1 vertices."""

    left: Tuple[int, ...]
    mid: Tuple[int, ...]
    right: Tuple[int, ...]

    @property
    def whole(self):
        return self.left + self.mid + self.right


def split_path(path: Sequence[int], d: int, drev: int) -> SplitTriple:
    path = tuple(path)
    if len(path) < d + drev + 2:
        raise PreconditionError(f"path of order {len(path)} cannot be split at ({d}, {drev})")
    return SplitTriple(path[:d + 1], path[d + 1:len(path) - 1 - drev], path[len(path) - 1 - drev:])


# ---------------------------------------------------------------------------
# Triple colouring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TripleColor:
    """
    The product colour of an ordered triple.

    c3 is (i, a, b): i names which pair of subpaths carries a shortcut edge,
    a and b index its endpoints on those subpaths. The edge itself is kept
    in `edge` (first-subpath endpoint first) and does not take part in
    comparisons.
    """

    c1: int
    d: int
    delta: int
    drev: int
    deltarev: int
    c3: Tuple[int, int, int] = (0, 0, 0)
    edge: Optional[Tuple[int, int]] = field(default=None, compare=False)

    def to_dict(self):
        return {
            "c1": self.c1,
            "c2": [self.d, self.delta],
            "c2rev": [self.drev, self.deltarev],
            "c3": list(self.c3),
        }


def _sign(a, b):
    return (a > b) - (a < b)


def _cross_edge(host, first, second, excluded=()):
    """Lexicographically smallest edge between the two vertex sequences, as (p in first, q in second)."""
    best = None
    second_mask = 0
    for y in second:
        second_mask |= 1 << y
    for p in first:
        hits = host.adjacency[p] & second_mask
        while hits:
            low = hits & -hits
            hits ^= low
            q = low.bit_length() - 1
            pair = (min(p, q), max(p, q))
            if pair in excluded:
                continue
            if best is None or pair < best[0]:
                best = (pair, p, q)
    if best is None:
        return None
    return best[1], best[2]


def _path_edges(path):
    return {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}


def color_triple(host: PathGraph, family: PathFamily, triple: Tuple[int, int, int]) -> TripleColor:
    """
    Colour the ordered triple (u, v, w).

    Args:
        host: host graph
        family: the P_{u,v} table from path_family
        triple: u < v < w

    Returns:
        TripleColor
    """
    u, v, w = triple
    if not u < v < w:
        raise PreconditionError(f"triple {triple} is not ordered")
    puv, puw, pvw = family[(u, v)], family[(u, w)], family[(v, w)]

    if len(puv) > len(puw):
        c1 = 1
    elif len(puv) < len(puw):
        c1 = 2
    elif len(pvw) > len(puw):
        c1 = 3
    elif len(pvw) < len(puw):
        c1 = 4
    else:
        c1 = 0

    x = max(set(puv) & set(puw))
    d, d_other = puv.index(x), puw.index(x)
    xrev = min(set(puw) & set(pvw))
    drev = len(pvw) - 1 - pvw.index(xrev)
    drev_other = len(puw) - 1 - puw.index(xrev)
    colour = dict(c1=c1, d=d, delta=_sign(d, d_other), drev=drev, deltarev=_sign(drev, drev_other))

    ell = len(puv)
    if c1 or colour["delta"] or colour["deltarev"] or ell < d + drev + 2:
        return TripleColor(**colour)

    s_uv, s_uw, s_vw = split_path(puv, d, drev), split_path(puw, d, drev), split_path(pvw, d, drev)
    cases = (
        (1, s_uw.left, s_uv.mid + s_uv.right, _path_edges(puv)),
        (2, s_vw.left + s_vw.mid, s_uw.right, _path_edges(pvw)),
        (3, s_uw.left, s_vw.left + s_vw.mid, ()),
        (4, s_uv.mid + s_uv.right, s_uw.right, ()),
        (5, s_uv.mid, s_vw.mid, ()),
    )
    for i, first, second, excluded in cases:
        found = _cross_edge(host, first, second, excluded)
        if found is not None:
            p, q = found
            return TripleColor(**colour, c3=(i, first.index(p), second.index(q)), edge=(p, q))
    return TripleColor(**colour)


class TripleColouring:
    """Lazily computed colour table over the ordered triples of a host."""

    def __init__(self, host: PathGraph, family: Optional[PathFamily] = None):
        self.host = host
        self.family = path_family(host) if family is None else family
        self.table = {}

    def __call__(self, u, v, w) -> TripleColor:
        key = (u, v, w)
        colour = self.table.get(key)
        if colour is None:
            colour = color_triple(self.host, self.family, key)
            self.table[key] = colour
        return colour


# ---------------------------------------------------------------------------
# Monochromatic 3-cliques
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CliqueRecord:
    """
    A monochromatic 3-clique K with its type (ell, d, drev) and, for every
    interior vertex, the markers u+ (at distance d along P_{u,w}) and u-
    (at distance drev from u along P_{x,u}).
    """

    vertices: Tuple[int, ...]
    colour: TripleColor
    ell: int
    plus_marker: Dict[int, int] = field(default_factory=dict, compare=False)
    minus_marker: Dict[int, int] = field(default_factory=dict, compare=False)

    @property
    def interior(self):
        return self.vertices[1:-1]

    @property
    def type(self):
        return (self.ell, self.colour.d, self.colour.drev)

    def to_dict(self):
        return {
            "vertices": list(self.vertices),
            "interior": list(self.interior),
            "type": list(self.type),
            "colour": self.colour.to_dict(),
            "plus_marker": {str(k): v for k, v in self.plus_marker.items()},
            "minus_marker": {str(k): v for k, v in self.minus_marker.items()},
        }


def _build_record(family, clique, colour):
    first, last = clique[0], clique[-1]
    ell = len(family[(clique[0], clique[1])])
    plus, minus = {}, {}
    for v in clique[1:-1]:
        forward, backward = family[(v, last)], family[(first, v)]
        if colour.d < len(forward):
            plus[v] = forward[colour.d]
        if colour.drev < len(backward):
            minus[v] = backward[len(backward) - 1 - colour.drev]
    return CliqueRecord(tuple(clique), colour, ell, plus, minus)


def _search_clique(n, size, colouring, start_colour=None):
    clique = []

    def extend(start, colour):
        if len(clique) == size:
            return tuple(clique), colour
        for v in range(start, n - (size - len(clique)) + 1):
            current, ok = colour, True
            for a, b in combinations(clique, 2):
                value = colouring(a, b, v)
                if current is None:
                    current = value
                elif value != current:
                    ok = False
                    break
            if ok:
                clique.append(v)
                found = extend(v + 1, current)
                if found:
                    return found
                clique.pop()
        return None

    return extend(0, start_colour)


def find_monochromatic_3clique(host: PathGraph, size: int,
                               colouring: Optional[TripleColouring] = None) -> Optional[CliqueRecord]:
    """
    The lexicographically smallest set of `size` vertices whose ordered
    triples all share one colour, or None.
    """
    if size < 3:
        raise PreconditionError(f"a 3-clique needs size >= 3, got {size}")
    if size > host.n:
        return None
    colouring = TripleColouring(host) if colouring is None else colouring
    found = _search_clique(host.n, size, colouring)
    if found is None:
        return None
    clique, colour = found
    return _build_record(colouring.family, clique, colour)


def largest_monochromatic_3clique(host: PathGraph, colouring: Optional[TripleColouring] = None,
                                  limit: Optional[int] = None) -> Optional[CliqueRecord]:
    """Grow the clique order from 3 until no monochromatic clique remains."""
    colouring = TripleColouring(host) if colouring is None else colouring
    best = None
    limit = host.n if limit is None else min(limit, host.n)
    for size in range(3, limit + 1):
        record = find_monochromatic_3clique(host, size, colouring)
        if record is None:
            break
        best = record
    return best


# ---------------------------------------------------------------------------
# Clique lemmas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaReport:
    checks: Dict[str, bool]
    preconditions_met: bool
    s: int

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self):
        return [name for name, ok in self.checks.items() if not ok]

    def to_dict(self):
        return {
            "s": self.s,
            "preconditions_met": self.preconditions_met,
            "passed": self.passed,
            "checks": dict(self.checks),
        }


def _check_record_shape(host, record):
    k = record.vertices
    if len(k) < 3:
        raise PreconditionError("malformed clique record: fewer than 3 vertices")
    if any(b <= a for a, b in zip(k, k[1:])) or k[0] < 0 or k[-1] >= host.n:
        raise PreconditionError(f"malformed clique record: vertices {list(k)} are not ascending host vertices")
    if set(record.plus_marker) - set(record.interior) or set(record.minus_marker) - set(record.interior):
        raise PreconditionError("malformed clique record: markers outside the interior")


def territory(family: PathFamily, interior: Sequence[int], v: int, d: int, drev: int):
    """Union of P^right_{u,v} for interior u < v and P^left_{v,w} for interior w > v."""
    out = set()
    for u in interior:
        if u < v:
            out.update(split_path(family[(u, v)], d, drev).right)
        elif u > v:
            out.update(split_path(family[(v, u)], d, drev).left)
    return out


def _guarded(check):
    try:
        return bool(check())
    except (PreconditionError, IndexError, KeyError, ValueError):
        return False


def verify_clique_lemmas(host: PathGraph, record: CliqueRecord, s: int,
                         family: Optional[PathFamily] = None) -> LemmaReport:
    """
    Re-check every structural property a monochromatic clique of order >= s
    must have when all increasing induced paths are shorter than s.

    Args:
        host: host graph
        record: clique to check
        s: the path-length threshold in force
        family: P_{u,v} table, recomputed when omitted

    Returns:
        LemmaReport; preconditions_met tells whether the properties are
        guaranteed or only reported
    """
    _check_record_shape(host, record)
    family = path_family(host) if family is None else family
    k, interior = record.vertices, record.interior
    d, drev, ell = record.colour.d, record.colour.drev, record.ell
    colour = TripleColouring(host, family)
    triples = list(combinations(k, 3))
    inner_triples = list(combinations(interior, 3))
    pairs = list(combinations(k, 2))

    def splits(u, v):
        return split_path(family[(u, v)], d, drev)

    def markers_consistent():
        for v in interior:
            for w in k:
                if w > v and family[(v, w)][d] != record.plus_marker[v]:
                    return False
            for u in k:
                if u < v:
                    path = family[(u, v)]
                    if path[len(path) - 1 - drev] != record.minus_marker[v]:
                        return False
        return True

    def markers_are_common_vertices():
        for u, v, w in inner_triples:
            if max(set(family[(u, v)]) & set(family[(u, w)])) != record.plus_marker[u]:
                return False
            if min(set(family[(u, w)]) & set(family[(v, w)])) != record.minus_marker[w]:
                return False
        return True

    def marker_order():
        for u, v in combinations(interior, 2):
            if not u <= record.plus_marker[u] < record.minus_marker[v] <= v:
                return False
        return True

    def territories_disjoint():
        seen = set()
        for v in interior:
            ter = territory(family, interior, v, d, drev)
            if ter & seen:
                return False
            seen |= ter
        return True

    def after_plus_disjoint():
        for u, v, w in inner_triples:
            a, b = splits(u, v), splits(u, w)
            if set(a.mid + a.right) & set(b.mid + b.right):
                return False
        return True

    def before_minus_disjoint():
        for u, v, w in inner_triples:
            a, b = splits(u, w), splits(v, w)
            if set(a.left + a.mid) & set(b.left + b.mid):
                return False
        return True

    checks = {
        "monochromatic": _guarded(lambda: all(colour(*t) == record.colour for t in triples)),
        "c1_zero": _guarded(lambda: all(colour(*t).c1 == 0 for t in triples)),
        "common_order": _guarded(
            lambda: all(len(family[p]) == ell for p in pairs) and 2 <= ell <= s - 1
        ),
        "split_balanced": record.colour.delta == 0 and record.colour.deltarev == 0,
        "markers_well_defined": _guarded(markers_consistent),
        "markers_are_common_vertices": _guarded(markers_are_common_vertices),
        "marker_order": _guarded(marker_order),
        "territories_disjoint": _guarded(territories_disjoint),
        "after_plus_disjoint": _guarded(after_plus_disjoint),
        "before_minus_disjoint": _guarded(before_minus_disjoint),
    }
    longest = max((len(p) for p in family.values()), default=1)
    preconditions = len(k) >= s and longest < s
    report = LemmaReport(checks, preconditions, s)
    if preconditions and not report.passed:
        logger.error(f"❌ clique {list(k)} fails {report.failed} although its preconditions hold")
    return report


# ---------------------------------------------------------------------------
# K_{t,t} extraction
# ---------------------------------------------------------------------------

def _call(f, triple):
    return f(triple) if callable(f) else f[triple]


def ktt_extract(host: PathGraph, vset: Sequence[int], f, f_prime, variant: str, t: int) -> KttWitness:
    """
    Read a K_{t,t} off two triple maps whose values are always adjacent.

    The first 2t+3 vertices of vset are laid out as z1 < X < z2 < Y < z3.
    Variant 123 uses the triples (x, y, z3), 321 uses (z1, x, y) and 132 uses
    (x, z2, y). Each map must be constant along one free coordinate and
    injective along the other; the constant values then form the two sides.

    Args:
        host: host graph
        vset: at least 2t+3 vertices
        f, f_prime: callables or mappings from ordered triples to vertices
        variant: "123", "321" or "132"
        t: side size

    Returns:
        KttWitness

    Raises:
        PreconditionError: a map is not constant or not injective where required
        InternalInvariantError: the sides are not completely joined
    """
    if t < 1:
        raise PreconditionError(f"t must be positive, got {t}")
    vs = sorted(vset)
    if len(vs) < 2 * t + 3:
        raise PreconditionError(f"need at least {2 * t + 3} vertices, got {len(vs)}")
    z1, xs, z2, ys, z3 = vs[0], vs[1:t + 1], vs[t + 1], vs[t + 2:2 * t + 2], vs[2 * t + 2]

    if variant == VARIANT_123:
        triple = lambda i, j: (xs[i], ys[j], z3)
    elif variant == VARIANT_321:
        triple = lambda i, j: (z1, xs[i], ys[j])
    elif variant == VARIANT_132:
        triple = lambda i, j: (xs[i], z2, ys[j])
    else:
        raise PreconditionError(f"unknown variant {variant!r}")

    grid = [[_call(f, triple(i, j)) for j in range(t)] for i in range(t)]
    grid_prime = [[_call(f_prime, triple(i, j)) for j in range(t)] for i in range(t)]
    # 123 and 132: f follows the X coordinate and f' the Y coordinate; 321 swaps them
    if variant == VARIANT_321:
        side_a = _side(grid, t, along_rows=False, name="f", triple=triple)
        side_b = _side(grid_prime, t, along_rows=True, name="f'", triple=triple)
    else:
        side_a = _side(grid, t, along_rows=True, name="f", triple=triple)
        side_b = _side(grid_prime, t, along_rows=False, name="f'", triple=triple)

    witness = KttWitness(tuple(side_a), tuple(side_b))
    if not witness.is_valid(host):
        raise InternalInvariantError(f"extracted sides {side_a} / {side_b} are not completely joined")
    return witness


def _side(grid, t, along_rows, name, triple):
    """Values that depend on the row index only (along_rows) or the column index only."""
    values = []
    for r in range(t):
        line = grid[r] if along_rows else [grid[i][r] for i in range(t)]
        for c in range(t):
            if line[c] != line[0]:
                i, j = (r, c) if along_rows else (c, r)
                raise PreconditionError(f"{name} is not constant where required, at triple {triple(i, j)}")
        values.append(line[0])
    if len(set(values)) != t:
        r = next(r for r in range(t) if values.index(values[r]) != r)
        i, j = (r, 0) if along_rows else (0, r)
        raise PreconditionError(f"{name} is not injective where required, at triple {triple(i, j)}")
    return values


# ---------------------------------------------------------------------------
# The path threshold s
# ---------------------------------------------------------------------------

def _tower_at_most(a, b, c, n, n_bits, budget):
    """True iff a^(b^c) <= n, for a, b >= 2; n is exact or only known by bit length."""
    limit = n_bits
    # a^(b^c) <= n < 2^limit forces b^c < limit
    if c * (b.bit_length() - 1) >= limit.bit_length():
        return False
    exponent = b ** c
    if exponent * (a.bit_length() - 1) >= limit:
        return False
    if exponent * a.bit_length() > budget:
        raise BitBudgetExceeded(
            f"tower needs about {exponent * a.bit_length()} bits", exponent * math.log2(a)
        )
    value = tower(a, exponent, budget=budget)
    if n is not None:
        return value <= n
    return value <= 1 << (limit - 1)


def _threshold_levels(s, t):
    a = 1000 * s ** 4
    return a, a, 2 * a * max(s, 2 * t + 5)


def s_from_n(n: Optional[int] = None, t: int = 1, bits: Optional[int] = None,
             budget: Optional[int] = None) -> int:
    """
    The largest s with n >= A * A * (2A·max(s, 2t+5)), A = 1000·s^4, towers nested to the right.

    Args:
        n: host order, exactly
        t: biclique size
        bits: alternatively, the bit length of n (n is taken as 2^(bits-1))
        budget: bit budget for exact tower evaluation

    Returns:
        s >= 0
    """
    if (n is None) == (bits is None):
        raise PreconditionError("give exactly one of n and bits")
    if t < 1:
        raise PreconditionError(f"t must be positive, got {t}")
    if n is not None and n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if bits is not None and bits < 1:
        raise PreconditionError(f"bits must be positive, got {bits}")
    budget = config.BIT_BUDGET if budget is None else budget
    n_bits = n.bit_length() if n is not None else bits
    s = 0
    while _tower_at_most(*_threshold_levels(s + 1, t), n, n_bits, budget):
        s += 1
    return s


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineOutcome:
    stage: str
    s: int
    t: int
    path: Optional[InducedPath] = None
    ktt: Optional[KttWitness] = None
    clique: Optional[CliqueRecord] = None
    lemmas: Optional[LemmaReport] = None
    certificate: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        out = {"stage": self.stage, "s": self.s, "t": self.t}
        if self.path is not None:
            out["path"] = list(self.path.vertices)
        if self.ktt is not None:
            out["ktt"] = self.ktt.to_dict()
        if self.clique is not None:
            out["clique"] = self.clique.to_dict()
        if self.lemmas is not None:
            out["lemmas"] = self.lemmas.to_dict()
        if self.certificate:
            out["certificate"] = self.certificate
        return out


def _concluding_certificate(host, family, record):
    """Glue the six subpaths of the first interior triple and shortcut the result."""
    u, v, w = record.interior[:3]
    d, drev = record.colour.d, record.colour.drev
    s_uv, s_uw, s_vw = (split_path(family[p], d, drev) for p in ((u, v), (u, w), (v, w)))
    glued = s_uw.left + s_uv.mid + s_uv.right + s_vw.left[1:] + s_vw.mid + s_uw.right
    shortcuts = [
        (glued[a], glued[b])
        for a in range(len(glued))
        for b in range(a + 2, len(glued))
        if host.has_edge(glued[a], glued[b])
    ]
    certificate = {"triple": [u, v, w], "glued": list(glued), "shortcuts": [list(e) for e in shortcuts]}
    if shortcuts:
        x = min(e[0] for e in shortcuts)
        y = max(e[1] for e in shortcuts if e[0] == x)
        certificate["shortcut_path"] = list(glued[:glued.index(x) + 1] + glued[glued.index(y):])
    return certificate


def main_pipeline(host: PathGraph, t: int, s_override: Optional[int] = None) -> PipelineOutcome:
    """
    Increasing induced path of order s, a K_{t,t}, or a report of why neither
    was reached.

    Args:
        host: host graph
        t: biclique size
        s_override: path threshold to use instead of s_from_n(n, t)

    Returns:
        PipelineOutcome with stage "path", "ktt", "ramsey-precondition-unmet"
        or "contradiction-certified" (the last one signals a bug)
    """
    if t < 1:
        raise PreconditionError(f"t must be positive, got {t}")
    s = s_from_n(host.n, t) if s_override is None else s_override
    family = path_family(host)
    longest = max(family.values(), key=len) if family else (0,)
    logger.info(f"main: n={host.n}, t={t}, s={s}, longest increasing induced path {len(longest)}")
    if len(longest) >= s:
        return PipelineOutcome(STAGE_PATH, s, t, path=InducedPath(longest, True))

    colouring = TripleColouring(host, family)
    size = max(s, 2 * t + 5)
    record = find_monochromatic_3clique(host, size, colouring)
    if record is None:
        largest = largest_monochromatic_3clique(host, colouring, limit=size - 1)
        return PipelineOutcome(STAGE_RAMSEY, s, t, clique=largest,
                               certificate={"required_clique_order": size})

    lemmas = verify_clique_lemmas(host, record, s, family)
    case = record.colour.c3[0]
    if case:
        interior = record.interior
        f = lambda triple: colouring(*triple).edge[0]
        f_prime = lambda triple: colouring(*triple).edge[1]
        try:
            witness = ktt_extract(host, interior, f, f_prime, VARIANT_FOR_CASE[case], t)
        except PreconditionError as e:
            raise InternalInvariantError(f"clique {list(record.vertices)} breaks the extraction maps: {e}")
        return PipelineOutcome(STAGE_KTT, s, t, ktt=witness, clique=record, lemmas=lemmas)

    logger.error(f"❌ clique {list(record.vertices)} has no shortcut colour; certifying the contradiction")
    certificate = _concluding_certificate(host, family, record)
    return PipelineOutcome(STAGE_CONTRADICTION, s, t, clique=record, lemmas=lemmas, certificate=certificate)
