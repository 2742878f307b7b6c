"""
Exhaustive ground truth: exact longest induced paths, exact g_H(n) by
enumerating every host, K_{t,t} detection and Erdős–Rado tower arithmetic.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import config
from .core import InducedPath, KttWitness, OrderedGraph, PathGraph, bits, popcount
from .errors import BitBudgetExceeded, CapExceededError, PreconditionError
from .patterns import contains_pattern

logger = logging.getLogger(__name__)


def _check_cap(host, cap, what):
    if host.n > cap:
        raise CapExceededError(f"{what} is capped at n={cap}, host has n={host.n}")


# ---------------------------------------------------------------------------
# Longest induced paths
# ---------------------------------------------------------------------------

def longest_induced_path_exact(host: PathGraph, target: Optional[int] = None,
                               cap: Optional[int] = None) -> InducedPath:
    """
    Maximum-order induced path of host, not necessarily increasing.

    Branch and bound over simple paths; a vertex stays available while it is
    not adjacent to any path vertex but the last. Among maximum paths the
    lexicographically smallest vertex sequence is returned.

    Args:
        host: host graph
        target: stop as soon as a path of this order is found
        cap: vertex cap, defaults to ORDPATH_PATH_CAP

    Returns:
        InducedPath

    Raises:
        CapExceededError: host larger than the cap
    """
    _check_cap(host, config.PATH_CAP if cap is None else cap, "longest_induced_path_exact")
    adj = host.adjacency
    full = (1 << host.n) - 1
    best = [()]
    path = []

    def extend(last, forbidden):
        if len(path) > len(best[0]):
            best[0] = tuple(path)
            if target is not None and len(path) >= target:
                return True
        free = full & ~forbidden
        if len(path) + popcount(free) <= len(best[0]):
            return False
        for w in bits(adj[last] & free):
            path.append(w)
            # w is now the last vertex; everything adjacent to `last` becomes forbidden
            if extend(w, forbidden | adj[last] | (1 << w)):
                return True
            path.pop()
        return False

    for start in range(host.n):
        path.append(start)
        if extend(start, 1 << start):
            break
        path.pop()
    return InducedPath(best[0], all(a < b for a, b in zip(best[0], best[0][1:])))


def longest_increasing_induced_path_exact(host: PathGraph, cap: Optional[int] = None) -> InducedPath:
    """Maximum-order strictly ascending induced path, lexicographically smallest among maxima."""
    _check_cap(host, config.PATH_CAP if cap is None else cap, "longest_increasing_induced_path_exact")
    adj = host.adjacency
    memo = {}

    def best_from(x, blocked):
        key = (x, blocked)
        if key in memo:
            return memo[key]
        out = (x,)
        for y in host.forward_neighbors(x):
            if blocked >> y & 1:
                continue
            mask = (blocked | adj[x]) & ~((1 << (y + 1)) - 1)
            cand = (x,) + best_from(y, mask)
            if len(cand) > len(out) or (len(cand) == len(out) and cand < out):
                out = cand
        memo[key] = out
        return out

    result = ()
    for start in range(host.n):
        cand = best_from(start, 0)
        if len(cand) > len(result):
            result = cand
    return InducedPath(result, True)


# ---------------------------------------------------------------------------
# Exact g_H(n)
# ---------------------------------------------------------------------------

def chord_pairs(n: int):
    """Every possible chord of an n-vertex host, in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i + 2, n)]


def iter_hosts(n: int):
    """All 2^(C(n,2)-(n-1)) hosts on n vertices; mask bit b selects chord_pairs(n)[b]."""
    pairs = chord_pairs(n)
    for mask in range(1 << len(pairs)):
        yield PathGraph.from_mask(n, mask, pairs)


@dataclass(frozen=True)
class GhnResult:
    h: OrderedGraph
    n: int
    value: Optional[int]
    witness: Optional[PathGraph]
    count_avoiding: int
    unavoidable: bool = False

    def to_dict(self):
        return {
            "n": self.n,
            "ghn": self.value,
            "unavoidable": self.unavoidable,
            "witness_chords": [list(c) for c in self.witness.sorted_chords()] if self.witness else None,
            "count_avoiding": self.count_avoiding,
        }


def _scan_chunk(job):
    """Minimum longest induced path over masks [lo, hi); returns (value, mask, count)."""
    h_n, h_edges, n, lo, hi = job
    h = OrderedGraph(h_n, h_edges)
    pairs = chord_pairs(n)
    best_value, best_mask, count = None, None, 0
    for mask in range(lo, hi):
        host = PathGraph.from_mask(n, mask, pairs)
        if contains_pattern(host, h) is not None:
            continue
        count += 1
        order = longest_induced_path_exact(host, target=best_value, cap=n).order
        if best_value is None or order < best_value:
            best_value, best_mask = order, mask
    return best_value, best_mask, count


def _chunks(total_bits, threads):
    c = min(total_bits, max(0, (threads - 1).bit_length()) + 2)
    size = 1 << (total_bits - c)
    return [(k * size, (k + 1) * size) for k in range(1 << c)]


def ghn_exact(h: OrderedGraph, n: int, threads: Optional[int] = None) -> GhnResult:
    """
    g_H(n) by brute force: the minimum over all h-avoiding hosts on n
    vertices of their longest induced path.

    The mask space is cut into a fixed power-of-two number of ordered chunks;
    each chunk reduces locally and the global minimum breaks ties by mask, so
    the result does not depend on the worker count.

    Args:
        h: pattern
        n: host order, at most ORDPATH_GHN_MAX_N
        threads: worker processes, defaults to ORDPATH_THREADS

    Returns:
        GhnResult; value is None and unavoidable is True when every host contains h
    """
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if n > config.GHN_MAX_N:
        raise CapExceededError(f"ghn_exact is capped at n={config.GHN_MAX_N}, got n={n}")
    threads = config.resolve_threads(threads)
    pairs = chord_pairs(n)
    jobs = [(h.n, h.edges, n, lo, hi) for lo, hi in _chunks(len(pairs), threads)]
    logger.info(f"🔢 ghn: n={n}, {1 << len(pairs)} hosts in {len(jobs)} chunks on {threads} worker(s)")
    if threads == 1:
        results = [_scan_chunk(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_chunk, jobs))

    count = sum(r[2] for r in results)
    found = [(value, mask) for value, mask, _ in results if value is not None]
    if not found:
        logger.info("ghn: every host contains the pattern")
        return GhnResult(h, n, None, None, 0, unavoidable=True)
    value, mask = min(found)
    return GhnResult(h, n, value, PathGraph.from_mask(n, mask, pairs), count)


# ---------------------------------------------------------------------------
# K_{t,t}
# ---------------------------------------------------------------------------

def contains_ktt(host: PathGraph, t: int) -> Optional[KttWitness]:
    """
    A K_{t,t} subgraph of the full edge set (path edges included), or None.

    Side A is the lexicographically first t-set with t common neighbors;
    side B is its t smallest common neighbors.
    """
    if not 1 <= t <= 3:
        raise CapExceededError(f"contains_ktt supports 1 <= t <= 3, got t={t}")
    _check_cap(host, config.KTT_CAP, "contains_ktt")
    adj = host.adjacency
    for side in combinations(range(host.n), t):
        common = adj[side[0]]
        for v in side[1:]:
            common &= adj[v]
            if not common:
                break
        if popcount(common) >= t:
            return KttWitness(tuple(side), tuple(bits(common)[:t]))
    return None


# ---------------------------------------------------------------------------
# Tower arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TowerEstimate:
    """Stand-in for a tower too large to materialize."""

    log2_estimate: float
    exceeded: bool = True

    def to_dict(self):
        return {"exceeded": True, "log2_estimate": self.log2_estimate}


def tower(*levels: int, budget: Optional[int] = None) -> int:
    """
    Right-nested exponentiation levels[0] ^ (levels[1] ^ (... ^ levels[-1])).

    Raises:
        BitBudgetExceeded: an intermediate value would need more than budget bits
    """
    if not levels:
        raise PreconditionError("tower needs at least one level")
    budget = config.BIT_BUDGET if budget is None else budget
    value = levels[-1]
    for base in reversed(levels[:-1]):
        if base in (0, 1):
            value = base ** value
            continue
        try:
            log2 = float(value) * math.log2(base)
        except OverflowError:
            log2 = math.inf
        if log2 > budget:
            raise BitBudgetExceeded(f"{base}^{value.bit_length()}-bit exponent exceeds {budget} bits", log2)
        value = base ** value
    return value


def ramsey_upper_general(q: int, N: int, k: int, budget: Optional[int] = None) -> int:
    """q * (q^(k-1)) * ... * (q^2) * (q(N-k)+1), right-nested."""
    _check_ramsey(q, N, k)
    levels = [q] + [q ** e for e in range(k - 1, 1, -1)] + [q * (N - k) + 1]
    return tower(*levels, budget=budget)


def ramsey_upper_k3(q: int, N: int, budget: Optional[int] = None) -> int:
    """q * q * (2q(N-3)+1)."""
    _check_ramsey(q, N, 3)
    return tower(q, q, 2 * q * (N - 3) + 1, budget=budget)


def _check_ramsey(q, N, k):
    if q < 1 or N < 1 or k < 2 or N < k:
        raise PreconditionError(f"need q, N >= 1, k >= 2 and N >= k, got q={q}, N={N}, k={k}")


def ramsey_upper(q: int, N: int, k: int, budget: Optional[int] = None):
    """
    Erdős–Rado upper bound on R_q(N; k); k = 3 uses the triple form.

    Returns:
        int, or a TowerEstimate when the value exceeds the bit budget
    """
    try:
        if k == 3:
            return ramsey_upper_k3(q, N, budget)
        return ramsey_upper_general(q, N, k, budget)
    except BitBudgetExceeded as e:
        logger.warning(f"⚠️ R_{q}({N};{k}) bound exceeds the bit budget")
        return TowerEstimate(e.log2_estimate)
