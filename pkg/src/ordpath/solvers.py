"""
Constructive induced-path extraction.

Every solver returns either a certified induced path of the host or a
witness that the host contains the pattern. Paths come with a guarantee:
a lower bound on their order that depends only on the host size and the
pattern, computed by the pure functions noncrossing_guarantee and
matching_guarantee, which follow the same recursion as the solvers.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Tuple

from .core import (
    InducedPath,
    OrderedGraph,
    PathGraph,
    PatternEmbedding,
    embeds,
    max_span,
    validate_induced_path,
)
from .errors import InternalInvariantError, InvalidPathError, PreconditionError
from .oracles import longest_induced_path_exact
from .patterns import (
    contains_pattern,
    contains_pattern_with_gap,
    decompose,
    depth,
    gen_halfgraph_pattern,
    has_crossing_pair,
    hat,
    is_hat,
    is_matching,
    is_noncrossing,
    is_perfect_matching,
    split_concatenation,
    strip_isolated,
    sub_pattern,
)

logger = logging.getLogger(__name__)

PATH = "path"
WITNESS = "witness"
NO_CLIQUE = "no-clique"

INF = math.inf


@dataclass(frozen=True)
class SolveOutcome:
    """Either an induced path or a pattern witness, plus where it came from."""

    kind: str
    provenance: str
    path: Optional[InducedPath] = None
    witness: Optional[PatternEmbedding] = None
    pattern: Optional[OrderedGraph] = None
    guarantee: Optional[int] = None
    detail: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        out = {"kind": self.kind}
        if self.path is not None:
            out["vertices"] = list(self.path.vertices)
            out["order"] = self.path.order
            out["increasing"] = self.path.increasing
        if self.witness is not None:
            out["positions"] = list(self.witness.positions)
            out["gap"] = self.witness.gap
        if self.guarantee is not None:
            out["guarantee"] = self.guarantee
        out["provenance"] = self.provenance
        if self.detail:
            out["detail"] = self.detail
        return out


def _path_outcome(host, vertices, provenance, guarantee=None, **detail):
    try:
        path = validate_induced_path(host, vertices)
    except InvalidPathError as e:
        raise InternalInvariantError(f"{provenance} produced a non-induced path: {e}")
    if guarantee is not None and path.order < guarantee:
        raise InternalInvariantError(
            f"{provenance} produced a path of order {path.order} below its guarantee {guarantee}"
        )
    return SolveOutcome(PATH, provenance, path=path, guarantee=guarantee, detail=detail)


def _witness_outcome(host, h, positions, provenance, guarantee=None, **detail):
    positions = tuple(positions)
    if not embeds(host, h, positions):
        raise InternalInvariantError(f"{provenance} produced an invalid embedding {positions}")
    return SolveOutcome(
        WITNESS, provenance, witness=PatternEmbedding(positions), pattern=h,
        guarantee=guarantee, detail=detail,
    )


# ---------------------------------------------------------------------------
# Increasing paths
# ---------------------------------------------------------------------------

def _shortest_increasing(host: PathGraph, a: int, b: int, allowed: Optional[int] = None):
    if allowed is not None and not (allowed >> a & 1 and allowed >> b & 1):
        return None
    dist = {b: 1}
    for v in range(b - 1, a - 1, -1):
        if allowed is not None and not allowed >> v & 1:
            continue
        best = None
        for w in host.forward_neighbors(v):
            if w > b:
                break
            d = dist.get(w)
            if d is not None and (best is None or d + 1 < best):
                best = d + 1
        if best is not None:
            dist[v] = best
    if a not in dist:
        return None
    path, v = [a], a
    while v != b:
        for w in host.forward_neighbors(v):
            if dist.get(w) == dist[v] - 1:
                path.append(w)
                v = w
                break
    return path


def shortest_increasing_path(host: PathGraph, a: int, b: int) -> InducedPath:
    """
    Minimum-order increasing path from a to b, lexicographically smallest
    among those. Such a path is always induced.
    """
    if not 0 <= a < b < host.n:
        raise PreconditionError(f"need 0 <= a < b < n, got a={a}, b={b}, n={host.n}")
    return InducedPath(tuple(_shortest_increasing(host, a, b)), True)


def span_path(host: PathGraph) -> InducedPath:
    """The shortest increasing path from 0 to n-1; its order is at least n / max_span."""
    if host.n < 2:
        raise PreconditionError("span_path needs n >= 2")
    path = shortest_increasing_path(host, 0, host.n - 1)
    if path.order * max_span(host) < host.n:
        raise InternalInvariantError(f"span path of order {path.order} is shorter than n / max_span")
    return path


# ---------------------------------------------------------------------------
# Integer helpers
# ---------------------------------------------------------------------------

def ceil_root(x: int, d: int) -> int:
    """Smallest r >= 0 with r**d >= x."""
    if x <= 1:
        return max(x, 0)
    if d == 1:
        return x
    try:
        r = int(round(x ** (1.0 / d)))
    except OverflowError:
        r = 1 << ((x.bit_length() + d - 1) // d)
    r = max(r, 1)
    while r ** d < x:
        r += 1
    while r > 1 and (r - 1) ** d >= x:
        r -= 1
    return r


def _ceil_div(a, b):
    return -(-a // b)


def _ceil_log2(n):
    return (n - 1).bit_length() if n >= 1 else 0


def noncrossing_threshold(n: int, d: int) -> int:
    """⌈n^(1 - 1/d)⌉."""
    return ceil_root(n ** (d - 1), d)


# ---------------------------------------------------------------------------
# Guarantee functions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _gnc(n, h):
    if h.n == 0:
        return INF
    if n <= 1:
        return n
    a, b = decompose(h)
    if b.n:
        return min(_gnc(n // 2, hat(a)), _gnc(n - n // 2, b))
    t = noncrossing_threshold(n, depth(h))
    best = _ceil_div(n, t)
    for inner in range(t, n - 1):
        best = min(best, _gnc(inner, a))
    return best


def noncrossing_guarantee(n: int, h: OrderedGraph) -> int:
    """
    Lower bound on the order of any path returned by solve_noncrossing.

    Args:
        n: host order
        h: non-empty non-crossing perfect matching

    Returns:
        Gnc(n, h)
    """
    if not h.edges or not is_perfect_matching(h) or has_crossing_pair(h):
        raise PreconditionError("need a non-empty non-crossing perfect matching")
    return int(_gnc(n, h))


def _remove_first_edge(h):
    j = h.partner(0)
    keep = [v for v in range(h.n) if v not in (0, j)]
    index = {v: r for r, v in enumerate(keep)}
    edges = frozenset((index[a], index[b]) for a, b in h.edges if a != 0)
    return j, OrderedGraph(len(keep), edges)


@lru_cache(maxsize=None)
def _inductive_parameters(n, h):
    """(j, h without its first edge, t, s, m) for the nested-window induction."""
    j, h_minus = _remove_first_edge(h)
    d = len(h.edges) - 1
    root = math.log2(n) ** (1.0 / d)
    t = max(2, math.ceil(root))
    s = max(1, math.ceil(root / 2))
    m = None
    for candidate in range(3, n + 1, 2):
        if _gm((candidate - 1) // 2, h_minus) >= t:
            m = candidate
            break
    if m is None and n >= 3:
        m = n if n % 2 else n - 1
    return j, h_minus, t, s, m


@lru_cache(maxsize=None)
def _ghat(n, h):
    if n <= 1:
        return n
    a = sub_pattern(h, 1, h.n - 1)
    t = ceil_root(n, 2)
    best = _ceil_div(n, t)
    for inner in range(t, n - 1):
        best = min(best, _gm(inner, a))
    return best


@lru_cache(maxsize=None)
def _gm(n, h):
    if h.n == 0:
        return INF
    if n <= 1:
        return n
    if len(h.edges) == 1:
        return n
    if is_noncrossing(h):
        return _gnc(n, h)
    parts = split_concatenation(h)
    if parts is not None:
        x, y = parts
        return min(_gm(n // 2, x), _gm(n - n // 2, y))
    if is_hat(h):
        return _ghat(n, h)
    if len(h.edges) == 2:
        return _ceil_div(_ceil_log2(n), 2)
    _, h_minus, t, s, m = _inductive_parameters(n, h)
    bound = INF
    if m is not None and n >= m:
        bound = min(t, _gm((m - 1) // 2, h_minus))
    size, copies = n, 0
    while m is not None and copies < s and size >= m:
        nxt = _ceil_div(size, m * t) - 1
        if nxt < 1:
            break
        copies += 1
        size = nxt
    return min(bound, copies + 1)


@dataclass(frozen=True)
class _IsolatedPlan:
    """How solve_matching handles a matching with isolated vertices on a host of order n."""

    lead: int
    trail: int
    run: int
    m: Optional[int]
    t: Optional[int]
    value: int


def _isolated_runs(h):
    active = [v for v in range(h.n) if h.degree(v) > 0]
    interior = [b - a - 1 for a, b in zip(active, active[1:])]
    return active[0], h.n - 1 - active[-1], max(interior, default=0)


@lru_cache(maxsize=None)
def _isolated_plan(n, h):
    core_pattern = strip_isolated(h)
    lead, trail, run = _isolated_runs(h)
    size = n - lead - trail
    if size < 1:
        return _IsolatedPlan(lead, trail, run, None, None, min(n, 1))
    if run == 0:
        return _IsolatedPlan(lead, trail, run, None, None, int(_gm(size, core_pattern)))
    # a copy of the stripped pattern with gap > run leaves room for every isolated run
    best = None
    for m in range(3, size + 1, 2):
        room = (size - 1) // (m * run)
        if room < 2:
            break
        t = int(min(room, _gm((m + 1) // 2, core_pattern)))
        if t >= 2 and (best is None or t > best[1]):
            best = (m, t)
    if best is None:
        return _IsolatedPlan(lead, trail, run, None, None, 1)
    return _IsolatedPlan(lead, trail, run, best[0], best[1], best[1])


def matching_guarantee(n: int, h: OrderedGraph) -> int:
    """
    Gm(n, h): lower bound on the order of any path returned by solve_matching.

    Isolated vertices of h are handled on the stripped pattern: leading and
    trailing ones shrink the host, and a longest run of k interior ones asks
    for a copy with gap at least k + 1, which find_gap_or_path delivers with
    m·t chosen so that ⌈n / (m·t)⌉ > k. The bound is then the largest such t
    that the contracted host still guarantees.
    """
    if not is_matching(h) or not h.edges:
        raise PreconditionError("need a matching with at least one edge")
    core_pattern = strip_isolated(h)
    if core_pattern.n == h.n:
        return int(_gm(n, core_pattern))
    return _isolated_plan(n, h).value


# ---------------------------------------------------------------------------
# Non-crossing matchings
# ---------------------------------------------------------------------------

def _solve_nc(host, lo, hi, h):
    n = hi - lo + 1
    if h.n == 0:
        return WITNESS, (), "noncrossing/empty"
    if n <= 1:
        return PATH, tuple(range(lo, hi + 1)), "noncrossing/trivial"
    a, b = decompose(h)
    if b.n:
        mid = lo + n // 2
        first = _solve_nc(host, lo, mid - 1, hat(a))
        second = _solve_nc(host, mid, hi, b)
        if first[0] == WITNESS and second[0] == WITNESS:
            return WITNESS, first[1] + second[1], "noncrossing/concat"
        paths = [r for r in (first, second) if r[0] == PATH]
        return max(paths, key=lambda r: len(r[1]))
    sub = host.sub_interval(lo, hi)
    ell = max_span(sub)
    threshold = noncrossing_threshold(n, depth(h))
    if ell <= threshold:
        path = _shortest_increasing(sub, 0, n - 1)
        return PATH, tuple(lo + v for v in path), "noncrossing/span"
    i, j = min((i, j) for i, j in sub.chords if j - i == ell)
    logger.debug(f"noncrossing: outer chord ({lo + i}, {lo + j}) of span {ell} > {threshold}")
    inner = _solve_nc(host, lo + i + 1, lo + j - 1, a)
    if inner[0] == WITNESS:
        return WITNESS, (lo + i,) + inner[1] + (lo + j,), "noncrossing/inner"
    return inner


def solve_noncrossing(host: PathGraph, h: OrderedGraph) -> SolveOutcome:
    """
    Induced path or witness for a non-crossing perfect matching h.

    Args:
        host: host graph
        h: non-empty non-crossing perfect matching

    Returns:
        Witness of h, or a path of order at least noncrossing_guarantee(n, h)
    """
    guarantee = noncrossing_guarantee(host.n, h)
    kind, data, provenance = _solve_nc(host, 0, host.n - 1, h)
    if kind == WITNESS:
        return _witness_outcome(host, h, data, provenance)
    return _path_outcome(host, data, provenance, guarantee)


# ---------------------------------------------------------------------------
# Crossing-free hosts
# ---------------------------------------------------------------------------

def _check_crossing_free(host):
    chords = host.sorted_chords()
    for (a, c), (b, d) in combinations(chords, 2):
        if a < b < c < d:
            raise PreconditionError(f"chords {(a, c)} and {(b, d)} cross")


def solve_crossing_free(host: PathGraph) -> Tuple[InducedPath, InducedPath]:
    """
    Two increasing induced paths L (from 0) and R (to n-1), L before R,
    with |L| + |R| >= log2 n, for a host whose chords do not cross.
    """
    if host.n < 2:
        raise PreconditionError("solve_crossing_free needs n >= 2")
    _check_crossing_free(host)
    lo, hi = 0, host.n - 1
    prefix, suffix = [], []
    while hi - lo + 1 > 2:
        size = hi - lo + 1
        # maximal edges form the path of farthest jumps; the edge (lo, hi) is ignored
        spine, x = [lo], lo
        while x != hi:
            x = max(w for w in host.forward_neighbors(x) if w <= hi and not (x == lo and w == hi))
            spine.append(x)
        t = len(spine) - 1
        r = next(r for r in range(t) if (spine[r + 1] - spine[r] + 1) * t >= size)
        prefix.extend(spine[:r])
        suffix = spine[r + 2:] + suffix
        lo, hi = spine[r], spine[r + 1]
    left = validate_induced_path(host, prefix + [lo])
    right = validate_induced_path(host, [hi] + suffix)
    if (1 << (left.order + right.order)) < host.n:
        raise InternalInvariantError("|L| + |R| fell below log2 n")
    return left, right


# ---------------------------------------------------------------------------
# Gap or path
# ---------------------------------------------------------------------------

def _blocks(n, m):
    base, extra = divmod(n, m)
    bounds, start = [], 0
    for r in range(m):
        size = base + (1 if r < extra else 0)
        bounds.append((start, start + size - 1))
        start += size
    return bounds


def _lift_path(host, superblocks, sequence):
    """Shortest host path visiting the superblocks of `sequence` in order, one segment each."""
    where = {}
    for k, c in enumerate(sequence):
        for v in superblocks[c]:
            where[v] = k
    last = len(sequence) - 1
    parent = {}
    queue = deque()
    for v in sorted(superblocks[sequence[0]]):
        parent[v] = None
        queue.append(v)
    while queue:
        v = queue.popleft()
        if where[v] == last:
            out = []
            while v is not None:
                out.append(v)
                v = parent[v]
            return out[::-1]
        for w in host.neighbors(v):
            k = where.get(w)
            if k is None or w in parent or k not in (where[v], where[v] + 1):
                continue
            parent[w] = v
            queue.append(w)
    raise InternalInvariantError("superblock sequence is not connected in the host")


def find_gap_or_path(host: PathGraph, h: OrderedGraph, m: int, t: int) -> SolveOutcome:
    """
    Either an induced path of order at least t, or a witness of h whose gap
    is at least ⌈n / (m·t)⌉.

    The host path is cut into m blocks; each even block is crossed by a
    shortest increasing path Q. A short Q has a long jump, and the odd blocks
    glued to the pieces of Q form a smaller host G' solved recursively. If
    the lifted path does not reach t (the recursive guarantee is too weak
    for the given m), the host itself is searched for a copy with the gap
    and then for an induced path of order t. Provenance
    "gap/precondition-unmet" means the host has neither.

    Args:
        host: host graph
        h: matching with at least one edge
        m: number of blocks, at least 3 and at most n
        t: target path order, at least 2

    Returns:
        SolveOutcome
    """
    n = host.n
    if m < 3 or t < 2:
        raise PreconditionError(f"need m >= 3 and t >= 2, got m={m}, t={t}")
    if m > n:
        raise PreconditionError(f"m={m} exceeds the host order {n}")
    if not is_matching(h) or not h.edges:
        raise PreconditionError("need a matching with at least one edge")

    bounds = _blocks(n, m)
    first = [lo for lo, _ in bounds]
    last = [hi for _, hi in bounds]
    crossings = {}
    for r in range(1, m - 1, 2):
        q = _shortest_increasing(host, last[r - 1], first[r + 1])
        if len(q) >= t:
            return _path_outcome(host, q, "gap/block-path", block=r + 1)
        k = max(range(len(q) - 1), key=lambda x: (q[x + 1] - q[x], -x))
        crossings[r] = (q[:k + 1], q[k + 1:])

    superblocks = []
    for r in range(0, m, 2):
        part = []
        if r - 1 in crossings:
            part.extend(crossings[r - 1][1][:-1])
        part.extend(range(first[r], last[r] + 1))
        if r + 1 in crossings:
            part.extend(crossings[r + 1][0][1:])
        elif r + 1 < m:
            part.extend(range(first[r + 1], last[r + 1] + 1))
        superblocks.append(part)

    owner = {v: c for c, part in enumerate(superblocks) for v in part}
    contracted = set()
    for x, y in host.all_edges():
        cx, cy = owner.get(x), owner.get(y)
        if cx is not None and cy is not None and cy - cx >= 2:
            contracted.add((cx, cy))
    small = PathGraph(len(superblocks), frozenset(contracted))
    logger.debug(f"gap: contracted host of order {small.n} with {len(contracted)} chords")
    inner = solve_matching(small, h)
    need_gap = _ceil_div(n, m * t)

    if inner.kind == WITNESS:
        c = inner.witness.positions
        positions = [min(superblocks[c[p]]) for p in range(h.n)]
        for p, q in h.edges:
            x, y = min(
                (x, y)
                for x in superblocks[c[p]]
                for y in host.neighbors(x)
                if owner.get(y) == c[q]
            )
            positions[p], positions[q] = x, y
        out = _witness_outcome(host, h, positions, "gap/lifted-witness")
        if out.witness.gap is not None and out.witness.gap < need_gap:
            raise InternalInvariantError(f"lifted witness gap {out.witness.gap} < {need_gap}")
        return out

    lifted = _lift_path(host, superblocks, inner.path.vertices)
    if len(lifted) >= t:
        return _path_outcome(host, lifted, "gap/lifted-path")
    logger.debug(f"gap: contracted host too small for t={t}, searching the host directly")
    return _settle_gap_or_path(host, h, t, need_gap)


def _settle_gap_or_path(host, h, t, need_gap):
    """Decide the dichotomy by search: a copy of h with the gap, else an induced path of order t."""
    emb = contains_pattern_with_gap(host, h, need_gap)
    if emb is not None:
        return _witness_outcome(host, h, emb.positions, "gap/direct-witness")
    # the search never extends a path beyond t vertices
    path = longest_induced_path_exact(host, target=t, cap=host.n)
    if path.order >= t:
        return _path_outcome(host, path.vertices, "gap/exact-path", t)
    logger.info(f"gap: no induced path of order {t} and no copy with gap {need_gap}")
    return _path_outcome(host, path.vertices, "gap/precondition-unmet", longest=path.order)


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

def _shift(outcome, lo):
    if outcome.kind == WITNESS:
        return WITNESS, tuple(lo + p for p in outcome.witness.positions), outcome.provenance
    return PATH, tuple(lo + v for v in outcome.path.vertices), outcome.provenance


def _solve_interval(host, lo, hi, h):
    if h.n == 0:
        return WITNESS, (), "matching/empty"
    return _shift(_solve_perfect(host.sub_interval(lo, hi), h), lo)


def solve_hat(host: PathGraph, h: OrderedGraph) -> SolveOutcome:
    """
    Induced path or witness for h = hat(A): if no edge spans more than
    ⌈√n⌉ the span path is long, otherwise search for A under the widest edge.
    """
    if not is_hat(h) or not is_perfect_matching(h):
        raise PreconditionError("solve_hat needs a perfect matching whose first and last vertices are joined")
    return _finish(host, h, _solve_hat(host, h), int(_ghat(host.n, h)))


def _solve_hat(host, h):
    n = host.n
    if n <= 1:
        return PATH, tuple(range(n)), "hat/trivial"
    inner_pattern = sub_pattern(h, 1, h.n - 1)
    ell = max_span(host)
    threshold = ceil_root(n, 2)
    if ell <= threshold:
        return PATH, tuple(_shortest_increasing(host, 0, n - 1)), "hat/span"
    i, j = min((i, j) for i, j in host.chords if j - i == ell)
    kind, data, provenance = _solve_interval(host, i + 1, j - 1, inner_pattern)
    if kind == WITNESS:
        return WITNESS, (i,) + data + (j,), "hat/inner"
    return kind, data, provenance


def _completing_chord(host, first, a, b):
    window = ((1 << b) - 1) & ~((1 << (a + 1)) - 1)
    for p in range(first):
        hits = host.chord_adjacency[p] & window
        if hits:
            return p, (hits & -hits).bit_length() - 1
    return None


def _solve_inductive(host, h):
    n = host.n
    j, h_minus, t, s, m = _inductive_parameters(n, h)
    logger.debug(f"matching: n={n}, t={t}, s={s}, m={m}")
    lo, hi, copies = 0, n - 1, 0
    for _ in range(s):
        if m is None or hi - lo + 1 < m:
            break
        out = find_gap_or_path(host.sub_interval(lo, hi), h_minus, m, t)
        if out.kind == PATH:
            return PATH, tuple(lo + v for v in out.path.vertices), "matching/" + out.provenance
        x = [lo + p for p in out.witness.positions]
        a, b = x[j - 2], x[j - 1]
        chord = _completing_chord(host, x[0], a, b)
        if chord is not None:
            p, q = chord
            return WITNESS, tuple([p] + x[:j - 1] + [q] + x[j - 1:]), "matching/completed-copy"
        if b - a < 2:
            break
        copies += 1
        lo, hi = a + 1, b - 1
    centre = (lo + hi) // 2 if copies else n - 1
    path = _shortest_increasing(host, 0, centre) if centre > 0 else [0]
    if len(path) < copies + 1:
        raise InternalInvariantError("final path crossed a nested window boundary")
    return PATH, tuple(path), "matching/nested-windows"


def _solve_perfect_raw(host, h):
    n = host.n
    if n <= 1:
        return PATH, tuple(range(n)), "matching/trivial"
    if len(h.edges) == 1:
        if host.chords:
            return WITNESS, min(host.chords), "matching/chord"
        return PATH, tuple(range(n)), "matching/bare-path"
    if is_noncrossing(h):
        return _solve_nc(host, 0, n - 1, h)
    parts = split_concatenation(h)
    if parts is not None:
        x, y = parts
        mid = n // 2
        first = _solve_interval(host, 0, mid - 1, x)
        second = _solve_interval(host, mid, n - 1, y)
        if first[0] == WITNESS and second[0] == WITNESS:
            return WITNESS, first[1] + second[1], "matching/concat"
        paths = [r for r in (first, second) if r[0] == PATH]
        return max(paths, key=lambda r: len(r[1]))
    if is_hat(h):
        return _solve_hat(host, h)
    if len(h.edges) == 2:
        emb = contains_pattern(host, h)
        if emb is not None:
            return WITNESS, emb.positions, "matching/crossing-pair"
        left, right = solve_crossing_free(host)
        best = left if left.order >= right.order else right
        return PATH, best.vertices, "matching/crossing-free"
    return _solve_inductive(host, h)


def _solve_perfect(host, h):
    return _finish(host, h, _solve_perfect_raw(host, h))


def _finish(host, h, result, guarantee=None):
    kind, data, provenance = result
    if kind == WITNESS:
        return _witness_outcome(host, h, data, provenance)
    if guarantee is None and h.n and is_perfect_matching(h):
        guarantee = int(_gm(host.n, h))
    return _path_outcome(host, data, provenance, guarantee)


def _lift_isolated(host, h, core_positions):
    """Re-insert the isolated vertices of h around an embedding of its stripped form."""
    active = [v for v in range(h.n) if h.degree(v) > 0]
    placed = dict(zip(active, core_positions))
    out, previous = [], -1
    for v in range(h.n):
        if v in placed:
            pos = placed[v]
            if pos <= previous:
                return None
        else:
            pos = previous + 1
            upcoming = next((placed[w] for w in range(v + 1, h.n) if w in placed), host.n)
            if pos >= upcoming:
                return None
        out.append(pos)
        previous = pos
    return out


def solve_matching(host: PathGraph, h: OrderedGraph) -> SolveOutcome:
    """
    Induced path or witness for any matching h with at least one edge.

    Dispatches on the shape of the stripped pattern: single edge, non-crossing,
    concatenation, enclosing edge, crossing pair, and otherwise the
    nested-window induction that repeatedly calls find_gap_or_path. Isolated
    vertices are re-inserted into a copy of the stripped pattern found with
    enough room around it (see matching_guarantee).

    Args:
        host: host graph
        h: matching with at least one edge

    Returns:
        Witness of h, or a path of order at least matching_guarantee(n, h)
    """
    if not is_matching(h) or not h.edges:
        raise PreconditionError("solve_matching needs a matching with at least one edge")
    core_pattern = strip_isolated(h)
    if core_pattern.n == h.n:
        return _solve_perfect(host, core_pattern)

    plan = _isolated_plan(host.n, h)
    lo, hi = plan.lead, host.n - 1 - plan.trail
    if plan.run == 0 and lo <= hi:
        kind, data, provenance = _shift(_solve_perfect(host.sub_interval(lo, hi), core_pattern), lo)
    elif plan.m is not None:
        logger.debug(f"matching: isolated run {plan.run}, gap search with m={plan.m}, t={plan.t}")
        out = find_gap_or_path(host.sub_interval(lo, hi), core_pattern, plan.m, plan.t)
        kind, data, provenance = _shift(out, lo)
        provenance = "matching/" + provenance
    else:
        direct = contains_pattern(host, h)
        if direct is not None:
            return _witness_outcome(host, h, direct.positions, "matching/direct-search")
        vertices = span_path(host).vertices if host.n >= 2 else tuple(range(host.n))
        return _path_outcome(host, vertices, "matching/small-host", plan.value)

    if kind == PATH:
        return _path_outcome(host, data, provenance, plan.value)
    lifted = _lift_isolated(host, h, data)
    if lifted is None:
        raise InternalInvariantError(f"{provenance} left no room for the isolated vertices at {data}")
    return _witness_outcome(host, h, lifted, provenance + "+isolated")


# ---------------------------------------------------------------------------
# Ordered half-graphs from 4-set colourings
# ---------------------------------------------------------------------------

def _vertex_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class _FourSetColouring:
    def __init__(self, host, paths):
        self.host = host
        self.paths = paths
        self.masks = {pair: _vertex_mask(p) for pair, p in paths.items()}
        self.cache = {}

    def __call__(self, quad):
        colour = self.cache.get(quad)
        if colour is None:
            colour = self._compute(quad)
            self.cache[quad] = colour
        return colour

    def _compute(self, quad):
        i, j, k, l = quad
        left, right = self.paths[(i, j)], self.paths[(k, l)]
        right_mask = self.masks[(k, l)]
        for s, x in enumerate(left):
            hits = self.host.adjacency[x] & right_mask
            if hits:
                y = (hits & -hits).bit_length() - 1
                return (s, right.index(y))
        return 0


def _greedy_clique(n, size, colour):
    clique, c = [], None
    for v in range(n):
        ok = True
        for triple in combinations(clique, 3):
            value = colour(triple + (v,))
            if c is None:
                c = value
            elif value != c:
                ok = False
                break
        if ok:
            clique.append(v)
            if len(clique) == size:
                return tuple(clique)
    return None


def _exhaustive_clique(n, size, colour):
    clique = []

    def extend(start, c):
        if len(clique) == size:
            return tuple(clique)
        for v in range(start, n - (size - len(clique)) + 1):
            current = c
            ok = True
            for triple in combinations(clique, 3):
                value = colour(triple + (v,))
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

    return extend(0, None)


def _colour_zero_path(host, clique, colour):
    """Shortest increasing path from the first to the last clique vertex inside the consecutive pair paths."""
    allowed = 0
    for a, b in zip(clique, clique[1:]):
        allowed |= colour.masks[(a, b)]
    return _shortest_increasing(host, clique[0], clique[-1], allowed)


def grs_search(host: PathGraph, p: int) -> SolveOutcome:
    """
    Increasing induced path of order p or an ordered half-graph H_{p/4}.

    Fixes a shortest increasing path between every pair of vertices, colours
    4-sets by how those paths touch, and looks for a monochromatic 4-clique
    of order 2p. When none exists (the usual case at small n) the outcome
    kind is NO_CLIQUE.
    """
    if p <= 0 or p % 4:
        raise PreconditionError(f"p must be a positive multiple of 4, got {p}")
    n = host.n
    if p > n:
        raise PreconditionError(f"p={p} exceeds the host order {n}")

    paths = {}
    for i in range(n):
        for j in range(i + 1, n):
            path = tuple(_shortest_increasing(host, i, j))
            if len(path) >= p:
                return _path_outcome(host, path, "grs/pair-path", p)
            paths[(i, j)] = path

    colour = _FourSetColouring(host, paths)
    size = 2 * p
    clique = _greedy_clique(n, size, colour) if size <= n else None
    if clique is None and size <= n:
        clique = _exhaustive_clique(n, size, colour)
    if clique is None:
        logger.info(f"grs: no monochromatic 4-clique of order {size} among {n} vertices")
        return SolveOutcome(NO_CLIQUE, "grs/no-clique", detail={"clique_order": size})

    c = colour(clique[:4])
    if c == 0:
        path = _colour_zero_path(host, clique, colour)
        return _path_outcome(host, path, "grs/colour-zero", p, clique=list(clique))
    s, t = c
    positions = []
    for r in range(p // 4):
        a_path = paths[(clique[4 * r], clique[4 * r + 1])]
        b_path = paths[(clique[4 * r + 2], clique[4 * r + 3])]
        try:
            positions += [a_path[s], b_path[t]]
        except IndexError:
            raise InternalInvariantError(f"colour {c} does not index the clique paths")
    return _witness_outcome(
        host, gen_halfgraph_pattern(p // 4), positions, "grs/half-graph",
        clique=list(clique), colour=[s, t],
    )
