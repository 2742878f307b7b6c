"""
Pattern containment, structural predicates, growth classification and the
pattern generators (half-graphs, M_i, Π(g), planar and genus patterns).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

import networkx as nx

from .core import (
    OrderedGraph,
    PathGraph,
    PatternEmbedding,
    popcount,
)
from .errors import InternalInvariantError, PreconditionError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Containment
# ---------------------------------------------------------------------------

def _search(host: PathGraph, h: OrderedGraph, min_gap: int) -> Optional[PatternEmbedding]:
    k, n = h.n, host.n
    if k == 0:
        return PatternEmbedding(())
    if k > n or (k - 1) * min_gap > n - 1:
        return None

    back = [[q for q in h.neighbors(p) if q < p] for p in range(k)]
    fwd_deg = [sum(1 for q in h.neighbors(p) if q > p) for p in range(k)]
    cadj = host.chord_adjacency
    host_fwd = [popcount(cadj[v] >> (v + 1)) for v in range(n)]
    host_back = [popcount(cadj[v] & ((1 << v) - 1)) for v in range(n)]
    # a pattern vertex whose degrees no host vertex matches rules out every embedding
    for p in range(k):
        if not any(host_fwd[v] >= fwd_deg[p] and host_back[v] >= len(back[p]) for v in range(n)):
            return None
    pos = [0] * k

    def place(p):
        if p == k:
            return True
        lo = pos[p - 1] + min_gap if p else 0
        hi = n - 1 - (k - 1 - p) * min_gap
        if lo > hi:
            return False
        cand = ((1 << (hi + 1)) - 1) & ~((1 << lo) - 1)
        for q in back[p]:
            cand &= cadj[pos[q]]
        need_fwd, need_back = fwd_deg[p], len(back[p])
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if host_fwd[v] < need_fwd or host_back[v] < need_back:
                continue
            pos[p] = v
            if place(p + 1):
                return True
        return False

    if place(0):
        return PatternEmbedding(tuple(pos))
    return None


def contains_pattern(host: PathGraph, h: OrderedGraph) -> Optional[PatternEmbedding]:
    """
    Find h as a pattern of host (an ordered subgraph of G - E(P)).

    Args:
        host: host graph
        h: pattern

    Returns:
        The lexicographically smallest embedding, or None when host avoids h
    """
    return _search(host, h, 1)


def contains_pattern_with_gap(host: PathGraph, h: OrderedGraph, min_gap: int) -> Optional[PatternEmbedding]:
    """Like contains_pattern, restricted to embeddings whose gap is at least min_gap."""
    if min_gap < 1:
        raise PreconditionError(f"min_gap must be at least 1, got {min_gap}")
    return _search(host, h, min_gap)


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def is_matching(h: OrderedGraph) -> bool:
    return all(h.degree(v) <= 1 for v in range(h.n))


def is_perfect_matching(h: OrderedGraph) -> bool:
    return all(h.degree(v) == 1 for v in range(h.n))


def crossing_pairs(h: OrderedGraph):
    """All pairs of edges (a, c), (b, d) with a < b < c < d."""
    edges = h.sorted_edges()
    for (a, c), (b, d) in combinations(edges, 2):
        if a < b < c < d:
            yield (a, c), (b, d)


def has_crossing_pair(h: OrderedGraph) -> bool:
    return next(crossing_pairs(h), None) is not None


def is_noncrossing(h: OrderedGraph) -> bool:
    return not has_crossing_pair(h)


def _require_noncrossing_perfect(h):
    if not is_perfect_matching(h):
        raise PreconditionError("pattern is not a perfect matching")
    if has_crossing_pair(h):
        raise PreconditionError("pattern has a crossing pair")


def sub_pattern(h: OrderedGraph, lo: int, hi: int) -> OrderedGraph:
    """The sub-pattern induced on vertices lo..hi-1, re-indexed from 0."""
    edges = [(i - lo, j - lo) for i, j in h.edges if lo <= i and j < hi]
    return OrderedGraph(max(0, hi - lo), frozenset(edges))


def decompose(h: OrderedGraph):
    """
    Dyck decomposition of a non-empty non-crossing perfect matching.

    Returns:
        (A, B) where h = hat(A) · B
    """
    _require_noncrossing_perfect(h)
    if h.n == 0:
        raise PreconditionError("the empty matching has no decomposition")
    j = h.partner(0)
    return sub_pattern(h, 1, j), sub_pattern(h, j + 1, h.n)


def depth(h: OrderedGraph) -> int:
    """Nesting depth of a non-crossing perfect matching (0 for the empty one)."""
    _require_noncrossing_perfect(h)
    best = level = 0
    for v in range(h.n):
        if h.partner(v) > v:
            level += 1
            best = max(best, level)
        else:
            level -= 1
    return best


def one_sided(h: OrderedGraph) -> bool:
    for v in range(h.n):
        nbrs = h.neighbors(v)
        if nbrs and nbrs[0] < v < nbrs[-1]:
            return False
    return True


def split_point(h: OrderedGraph) -> Optional[int]:
    """Least i such that every edge (j, j') has j <= i < j'."""
    if not h.edges:
        return 0 if h.n >= 1 else None
    max_left = max(i for i, _ in h.edges)
    min_right = min(j for _, j in h.edges)
    return max_left if max_left < min_right else None


def is_hat(h: OrderedGraph) -> bool:
    """True if the first and last vertices are joined (h = hat(A))."""
    return h.n >= 2 and (0, h.n - 1) in h.edges


def split_concatenation(h: OrderedGraph):
    """
    Split h = X · Y at the first position no edge jumps over.

    Returns:
        (X, Y) with both parts non-empty, or None when h is not a concatenation
    """
    reach = -1
    for v in range(h.n - 1):
        nbrs = h.neighbors(v)
        if nbrs:
            reach = max(reach, nbrs[-1])
        if reach <= v:
            return sub_pattern(h, 0, v + 1), sub_pattern(h, v + 1, h.n)
    return None


@lru_cache(maxsize=None)
def halfgraph_host(m: int) -> PathGraph:
    """The half-graph H_m laid out as a host whose chords are its edges."""
    return PathGraph(2 * m, gen_halfgraph_pattern(m).edges)


def halfgraph_index(h: OrderedGraph) -> Optional[int]:
    """Smallest m such that h is an ordered subgraph of H_m, searched up to 4·|V(h)|."""
    for m in range(1, max(1, 4 * h.n) + 1):
        if h.n <= 2 * m and contains_pattern(halfgraph_host(m), h) is not None:
            return m
    return None


def lift_halfgraph_embedding(halfgraph_positions: Sequence[int], h: OrderedGraph) -> PatternEmbedding:
    """
    Turn an embedding of H_{4k} (k = |V(h)|) into an embedding of a one-sided h.

    Vertex u_i of h goes to a_{4i-3} when its neighbors are all larger,
    otherwise to b_{4i-1}.
    """
    if not one_sided(h):
        raise PreconditionError("only one-sided patterns embed in half-graphs")
    k = h.n
    if len(halfgraph_positions) < 8 * k:
        raise PreconditionError(f"need an embedding of H_{4 * k} ({8 * k} positions)")
    out = []
    for v in range(k):
        nbrs = h.neighbors(v)
        i = v + 1
        index = 2 * (4 * i - 4) if not nbrs or nbrs[0] > v else 2 * (4 * i - 1) - 1
        out.append(halfgraph_positions[index])
    return PatternEmbedding(tuple(out))


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

POLYNOMIAL = "polynomial"
POLYLOG = "polylog"
LOGLOG = "loglog"
LOGLOGLOG = "logloglog"
BOUNDED = "bounded"

LINEAR = "linear"
LOG = "log"
NONE_KNOWN = "none-known"


@dataclass(frozen=True)
class GrowthClass:
    """Lower and upper growth tiers of g_H; d is the exponent denominator."""

    lower: str
    upper: str
    d: Optional[int] = None

    def to_dict(self):
        out = {"lower": self.lower}
        if self.d is not None:
            out["d"] = self.d
        out["upper"] = self.upper
        return out


def classify(h: OrderedGraph) -> GrowthClass:
    if is_matching(h):
        if is_noncrossing(h):
            return GrowthClass(POLYNOMIAL, LINEAR, depth(strip_isolated(h)))
        return GrowthClass(POLYLOG, LOG, len(h.edges) - 1)
    if split_point(h) is not None:
        return GrowthClass(LOGLOG, NONE_KNOWN)
    if one_sided(h):
        return GrowthClass(LOGLOGLOG, LOG)
    return GrowthClass(BOUNDED, LOG)


DESCRIBE_HALFGRAPH_CAP = 12


def describe(h: OrderedGraph) -> dict:
    """Every structural predicate of h, as used by `classify` on the command line."""
    info = {
        "n": h.n,
        "edges": len(h.edges),
        "matching": is_matching(h),
        "perfect_matching": is_perfect_matching(h),
        "crossing": has_crossing_pair(h),
        "one_sided": one_sided(h),
        "split_point": split_point(h),
    }
    # the half-graph search is exponential in |V(h)|
    info["halfgraph_index"] = halfgraph_index(h) if h.n <= DESCRIBE_HALFGRAPH_CAP else None
    if info["perfect_matching"] and not info["crossing"]:
        info["depth"] = depth(h)
    info.update(classify(h).to_dict())
    return info


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------

def concat(a: OrderedGraph, b: OrderedGraph) -> OrderedGraph:
    shifted = [(i + a.n, j + a.n) for i, j in b.edges]
    return OrderedGraph(a.n + b.n, a.edges | frozenset(shifted))


def hat(h: OrderedGraph) -> OrderedGraph:
    edges = [(i + 1, j + 1) for i, j in h.edges] + [(0, h.n + 1)]
    return OrderedGraph(h.n + 2, frozenset(edges))


def plus_h(h: OrderedGraph, k: int) -> OrderedGraph:
    """Insert k isolated vertices between every two consecutive vertices of a matching."""
    if not is_matching(h):
        raise PreconditionError("plus_h needs a matching")
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    if h.n == 0:
        return OrderedGraph(0)
    step = k + 1
    edges = [(i * step, j * step) for i, j in h.edges]
    return OrderedGraph((h.n - 1) * step + 1, frozenset(edges))


def strip_isolated(h: OrderedGraph) -> OrderedGraph:
    keep = [v for v in range(h.n) if h.degree(v) > 0]
    index = {v: r for r, v in enumerate(keep)}
    return OrderedGraph(len(keep), frozenset((index[i], index[j]) for i, j in h.edges))


# ---------------------------------------------------------------------------
# Catalog and generators
# ---------------------------------------------------------------------------

def single_edge() -> OrderedGraph:
    return OrderedGraph(2, frozenset({(0, 1)}))


def crossing_pair() -> OrderedGraph:
    """The 2-crossing matching M."""
    return OrderedGraph(4, frozenset({(0, 2), (1, 3)}))


def nested_pair() -> OrderedGraph:
    return OrderedGraph(4, frozenset({(0, 3), (1, 2)}))


def ordered_path(k: int) -> OrderedGraph:
    return OrderedGraph(k, frozenset((i, i + 1) for i in range(k - 1)))


def gen_halfgraph_pattern(m: int) -> OrderedGraph:
    """H_m: a_1 b_1 ... a_m b_m with a_i ~ b_j iff i < j."""
    if m < 0:
        raise PreconditionError(f"m must be non-negative, got {m}")
    edges = [(2 * i, 2 * j + 1) for i in range(m) for j in range(i + 1, m)]
    return OrderedGraph(2 * m, frozenset(edges))


def gen_Mi(i: int) -> OrderedGraph:
    """M_0 is empty; M_i is three concatenated copies of hat(M_{i-1})."""
    if i < 0:
        raise PreconditionError(f"i must be non-negative, got {i}")
    g = OrderedGraph(0)
    for _ in range(i):
        block = hat(g)
        g = concat(concat(block, block), block)
    return g


def to_networkx(g: OrderedGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def _node_order(g):
    nodes = list(g.nodes())
    try:
        return sorted(nodes)
    except TypeError:
        return nodes


def gen_pi(g) -> OrderedGraph:
    """
    Π(g): one block per vertex of g, listing its neighbors in ascending order;
    the copy of w in v's block is matched with the copy of v in w's block.

    Args:
        g: a networkx graph or an OrderedGraph read as a plain graph

    Returns:
        A perfect matching with |E(g)| edges on 2|E(g)| vertices
    """
    if isinstance(g, OrderedGraph):
        g = to_networkx(g)
    order = _node_order(g)
    rank = {v: r for r, v in enumerate(order)}
    slot = {}
    for v in order:
        for w in sorted(g.neighbors(v), key=rank.__getitem__):
            if w == v:
                raise PreconditionError(f"self-loop at {v!r}")
            slot[(v, w)] = len(slot)
    edges = []
    for v, w in g.edges():
        a, b = slot[(v, w)], slot[(w, v)]
        edges.append((min(a, b), max(a, b)))
    return OrderedGraph(len(slot), frozenset(edges))


def gen_planar_pattern() -> OrderedGraph:
    """Ĥ for the 3-crossing matching H on 6 vertices."""
    return hat(OrderedGraph(6, frozenset({(0, 3), (1, 4), (2, 5)})))


def gen_genus_pattern(k: int) -> OrderedGraph:
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    block = gen_planar_pattern()
    g = block
    for _ in range(k):
        g = concat(g, block)
    return g


def gen_ordered_biclique(h: int) -> OrderedGraph:
    """K_{h,h} with one side entirely before the other."""
    return OrderedGraph(2 * h, frozenset((i, h + j) for i in range(h) for j in range(h)))


def gen_outerplanar_matching(g: nx.Graph, order: Sequence) -> OrderedGraph:
    """
    Blow up each vertex of the Hamiltonian path `order` into one vertex per
    non-path edge at it. When those edges do not cross along the path, the
    result is a non-crossing perfect matching whose presence forces g as a minor.
    """
    order = list(order)
    if len(set(order)) != len(order) or set(order) != set(g.nodes()):
        raise PreconditionError("order must list every vertex of g exactly once")
    rank = {v: r for r, v in enumerate(order)}
    for a, b in zip(order, order[1:]):
        if not g.has_edge(a, b):
            raise PreconditionError(f"{a!r} and {b!r} are consecutive in order but not adjacent")
    chords = sorted(
        (min(rank[a], rank[b]), max(rank[a], rank[b]))
        for a, b in g.edges()
        if abs(rank[a] - rank[b]) >= 2
    )
    for (a, c), (b, d) in combinations(chords, 2):
        if a < b < c < d or b < a < d < c:
            raise PreconditionError(f"non-path edges {(a, c)} and {(b, d)} cross along the path")
    incident = {r: [] for r in range(len(order))}
    for a, c in chords:
        incident[a].append(c)
        incident[c].append(a)
    slot = {}
    for r in range(len(order)):
        left = sorted((x for x in incident[r] if x < r), reverse=True)
        right = sorted((x for x in incident[r] if x > r), reverse=True)
        for x in left + right:
            slot[(r, x)] = len(slot)
    edges = frozenset((slot[(a, c)], slot[(c, a)]) for a, c in chords)
    result = OrderedGraph(len(slot), edges)
    if has_crossing_pair(result):
        raise InternalInvariantError("blow-up of a non-crossing layout crossed")
    return result
