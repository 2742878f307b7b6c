"""
Extremal and random host generators.
"""

import logging
from typing import Optional

import numpy as np

from .core import PathGraph
from .errors import PreconditionError

logger = logging.getLogger(__name__)


def gen_example1(n: int) -> PathGraph:
    """
    Half-graph-like host with induced paths of order at most 4.

    Every even index i is joined to every later odd index j with j - i >= 2.
    """
    if n < 2:
        raise PreconditionError(f"example1 needs n >= 2, got {n}")
    chords = [(i, j) for i in range(0, n, 2) for j in range(i + 3, n, 2)]
    return PathGraph(n, frozenset(chords))


def _example2_chords(i):
    # returns (order, chords) of G_i laid out as u, A, v, B, w
    if i == 1:
        return 1, []
    m, inner = _example2_chords(i - 1)
    u, v, w = 0, m + 1, 2 * m + 2
    chords = [(u, v), (u, w)]
    chords += [(a + 1, b + 1) for a, b in inner]
    chords += [(a + m + 2, b + m + 2) for a, b in inner]
    return 2 * m + 3, chords


def gen_example2(i: int) -> PathGraph:
    """
    The recursive G_i with logarithmic induced paths.

    Args:
        i: recursion level, G_1 is a single vertex

    Returns:
        Host on 2|V(G_{i-1})| + 3 vertices where every vertex has at most
        one chord to a smaller vertex
    """
    if i < 1:
        raise PreconditionError(f"example2 needs i >= 1, got {i}")
    n, chords = _example2_chords(i)
    return PathGraph(n, frozenset(chords))


def make_rng(seed: Optional[int]) -> np.random.Generator:
    """PCG64 generator; the seed fully determines every draw."""
    return np.random.Generator(np.random.PCG64(seed))


def random_host(n: int, density: float, seed: Optional[int] = None) -> PathGraph:
    """
    Random host: each candidate chord, taken in lexicographic order, is kept
    when a uniform [0, 1) draw falls below density.
    """
    if n < 1:
        raise PreconditionError(f"random host needs n >= 1, got {n}")
    if not 0.0 <= density <= 1.0:
        raise PreconditionError(f"density must lie in [0, 1], got {density}")
    rng = make_rng(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 2, n)]
    draws = rng.random(len(pairs))
    chords = [pair for pair, x in zip(pairs, draws) if x < density]
    return PathGraph(n, frozenset(chords))


def gen_alternating_biclique(t: int) -> PathGraph:
    """K_{t,t} with sides at even and odd positions of its Hamiltonian path 0..2t-1."""
    if t < 1:
        raise PreconditionError(f"t must be positive, got {t}")
    n = 2 * t
    chords = [(i, j) for i in range(n) for j in range(i + 2, n) if (j - i) % 2 == 1]
    return PathGraph(n, frozenset(chords))


def gen_spread_biclique_host(side: int, seed: Optional[int] = None, padding: int = 1,
                             extra_density: float = 0.0) -> PathGraph:
    """
    A Hamiltonian host containing an arbitrarily ordered K_{side,side}.

    The 2·side biclique vertices receive a random two-colouring and sit at
    positions separated by `padding` >= 1 filler vertices, so every biclique
    edge is a chord. Extra random chords are added with extra_density.
    """
    if side < 1 or padding < 1:
        raise PreconditionError("side and padding must be positive")
    rng = make_rng(seed)
    k = 2 * side
    colour = np.zeros(k, dtype=int)
    colour[rng.permutation(k)[:side]] = 1
    step = padding + 1
    n = (k - 1) * step + 1
    spots = [r * step for r in range(k)]
    chords = {
        (spots[a], spots[b])
        for a in range(k) for b in range(a + 1, k)
        if colour[a] != colour[b]
    }
    if extra_density > 0:
        pairs = [(i, j) for i in range(n) for j in range(i + 2, n)]
        draws = rng.random(len(pairs))
        chords.update(pair for pair, x in zip(pairs, draws) if x < extra_density)
    return PathGraph(n, frozenset(chords))


def complete_host(n: int) -> PathGraph:
    """Every pair is an edge; all increasing induced paths have order at most 2."""
    if n < 1:
        raise PreconditionError(f"complete host needs n >= 1, got {n}")
    return PathGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 2, n)))
