"""
Data model shared by every ordpath module.

Patterns are ordered graphs whose vertices are their positions 0..n-1.
Hosts are graphs with the Hamiltonian path 0,1,...,n-1; only the chords
(edges of span at least 2) are stored, the path edges are implicit.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple

from .errors import InvalidPathError, ParseError, PreconditionError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _normalize_pairs(pairs):
    return frozenset((int(i), int(j)) for i, j in pairs)


@dataclass(frozen=True)
class OrderedGraph:
    """An ordered graph; vertex i precedes vertex j iff i < j."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "edges", _normalize_pairs(self.edges))
        if self.n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {self.n}")
        for i, j in self.edges:
            if not 0 <= i < j < self.n:
                raise PreconditionError(f"edge ({i}, {j}) is not a pair i < j inside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, edges: Iterable[Edge] = ()) -> "OrderedGraph":
        return cls(n, frozenset(edges))

    def sorted_edges(self):
        return sorted(self.edges)

    @cached_property
    def _neighbor_lists(self):
        nbrs = [[] for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def neighbors(self, v: int):
        return self._neighbor_lists[v]

    def degree(self, v: int) -> int:
        return len(self._neighbor_lists[v])

    def partner(self, v: int) -> Optional[int]:
        """The unique neighbor of v in a matching, or None."""
        nbrs = self._neighbor_lists[v]
        return nbrs[0] if nbrs else None

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class PathGraph:
    """A host graph (G, P): Hamiltonian path 0..n-1 plus a set of chords."""

    n: int
    chords: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "chords", _normalize_pairs(self.chords))
        if self.n < 1:
            raise PreconditionError(f"a host needs at least one vertex, got n={self.n}")
        for i, j in self.chords:
            if i < 0 or j >= self.n or j - i < 2:
                raise PreconditionError(f"chord ({i}, {j}) must satisfy 0 <= i, j - i >= 2, j < {self.n}")

    @classmethod
    def of(cls, n: int, chords: Iterable[Edge] = ()) -> "PathGraph":
        return cls(n, frozenset(chords))

    @classmethod
    def bare(cls, n: int) -> "PathGraph":
        return cls(n, frozenset())

    @classmethod
    def from_mask(cls, n: int, mask: int, pairs: Sequence[Edge]) -> "PathGraph":
        """Host whose chords are the pairs selected by the bits of mask."""
        chords = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        return cls(n, frozenset(chords))

    def sorted_chords(self):
        return sorted(self.chords)

    @cached_property
    def chord_adjacency(self) -> Tuple[int, ...]:
        masks = [0] * self.n
        for i, j in self.chords:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        masks = list(self.chord_adjacency)
        for v in range(self.n - 1):
            masks[v] |= 1 << (v + 1)
            masks[v + 1] |= 1 << v
        return tuple(masks)

    def has_chord(self, i: int, j: int) -> bool:
        return bool(self.chord_adjacency[i] >> j & 1)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def neighbors(self, v: int):
        return bits(self.adjacency[v])

    @cached_property
    def _forward(self):
        return tuple(tuple(w for w in bits(self.adjacency[v]) if w > v) for v in range(self.n))

    def forward_neighbors(self, v: int):
        """Neighbors of v larger than v, ascending."""
        return self._forward[v]

    def all_edges(self):
        """Every edge of G (path edges and chords), sorted."""
        path = [(v, v + 1) for v in range(self.n - 1)]
        return sorted(path + list(self.chords))

    def sub_interval(self, lo: int, hi: int) -> "PathGraph":
        """The induced sub-host on lo..hi, re-indexed to start at 0."""
        if not 0 <= lo <= hi < self.n:
            raise PreconditionError(f"interval [{lo}, {hi}] outside host of order {self.n}")
        chords = [(i - lo, j - lo) for i, j in self.chords if lo <= i and j <= hi]
        return PathGraph(hi - lo + 1, frozenset(chords))

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class InducedPath:
    vertices: Tuple[int, ...]
    increasing: bool = False

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class PatternEmbedding:
    """Strictly increasing host positions realizing a pattern."""

    positions: Tuple[int, ...]
    gap: Optional[int] = None

    def __post_init__(self):
        positions = tuple(int(p) for p in self.positions)
        object.__setattr__(self, "positions", positions)
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise PreconditionError(f"embedding positions must be strictly increasing: {positions}")
        object.__setattr__(self, "gap", compute_gap(positions))

    @classmethod
    def from_positions(cls, positions: Iterable[int]) -> "PatternEmbedding":
        return cls(tuple(positions))


@dataclass(frozen=True)
class KttWitness:
    """Two disjoint t-sets, every cross pair joined by an edge of the host."""

    side_a: Tuple[int, ...]
    side_b: Tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.side_a)

    def is_valid(self, host: "PathGraph") -> bool:
        if len(self.side_a) != len(self.side_b) or set(self.side_a) & set(self.side_b):
            return False
        return all(host.has_edge(a, b) for a in self.side_a for b in self.side_b)

    def to_dict(self):
        return {"side_a": list(self.side_a), "side_b": list(self.side_b)}


def compute_gap(positions: Sequence[int]) -> Optional[int]:
    """Minimum distance between consecutive positions; None for fewer than two."""
    if len(positions) < 2:
        return None
    return min(b - a for a, b in zip(positions, positions[1:]))


def bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def embeds(host: PathGraph, h: OrderedGraph, positions: Sequence[int]) -> bool:
    """True if positions realize h as a pattern of host."""
    if len(positions) != h.n:
        return False
    if any(b <= a for a, b in zip(positions, positions[1:])):
        return False
    if positions and (positions[0] < 0 or positions[-1] >= host.n):
        return False
    return all(host.has_chord(positions[p], positions[q]) for p, q in h.edges)


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------

def _meaningful_lines(text):
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as e:
            raise ParseError(f"file is not ASCII ({e})")
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _parse_int(token, line):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line)


def _parse(text, header, keyword):
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError(f"missing '{header} <n>' header")
    number, tokens = lines[0]
    if len(tokens) != 2 or tokens[0] != header:
        raise ParseError(f"malformed header, expected '{header} <n>'", number)
    n = _parse_int(tokens[1], number)
    if n < 0:
        raise ParseError(f"vertex count must be non-negative, got {n}", number)
    pairs = set()
    for number, tokens in lines[1:]:
        if len(tokens) != 3 or tokens[0] != keyword:
            raise ParseError(f"expected '{keyword} <i> <j>'", number)
        i, j = _parse_int(tokens[1], number), _parse_int(tokens[2], number)
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in ({i}, {j})", number)
        if i >= j:
            raise ParseError(f"i >= j in ({i}, {j})", number)
        if keyword == "chord" and j - i < 2:
            raise ParseError(f"chord span < 2 in ({i}, {j}); path edges are implicit", number)
        if (i, j) in pairs:
            raise ParseError(f"duplicate {keyword} ({i}, {j})", number)
        pairs.add((i, j))
    return n, pairs


def parse_ordered_graph(text) -> OrderedGraph:
    """
    Parse a pattern file.

    Args:
        text: file content as bytes or str

    Returns:
        The described OrderedGraph
    """
    n, edges = _parse(text, "pattern", "edge")
    return OrderedGraph(n, frozenset(edges))


def parse_path_graph(text) -> PathGraph:
    """Parse a host file (`pathgraph <n>` followed by `chord <i> <j>` lines)."""
    n, chords = _parse(text, "pathgraph", "chord")
    if n < 1:
        raise ParseError("a host needs at least one vertex", 1)
    return PathGraph(n, frozenset(chords))


def serialize_ordered_graph(g: OrderedGraph) -> str:
    lines = [f"pattern {g.n}"] + [f"edge {i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def serialize_path_graph(host: PathGraph) -> str:
    lines = [f"pathgraph {host.n}"] + [f"chord {i} {j}" for i, j in host.sorted_chords()]
    return "\n".join(lines) + "\n"


def read_pattern_file(path) -> OrderedGraph:
    return parse_ordered_graph(Path(path).read_bytes())


def read_host_file(path) -> PathGraph:
    return parse_path_graph(Path(path).read_bytes())


# ---------------------------------------------------------------------------
# Induced paths
# ---------------------------------------------------------------------------

def validate_induced_path(host: PathGraph, seq: Sequence[int]) -> InducedPath:
    """
    Check that seq is an induced path of host.

    Args:
        host: the host graph
        seq: candidate vertex sequence

    Returns:
        InducedPath, flagged increasing iff seq is strictly ascending

    Raises:
        PreconditionError: empty sequence or vertex out of range
        InvalidPathError: duplicate vertex, missing path edge or shortcut chord
    """
    seq = tuple(int(v) for v in seq)
    if not seq:
        raise PreconditionError("an induced path needs at least one vertex")
    for v in seq:
        if not 0 <= v < host.n:
            raise PreconditionError(f"vertex {v} out of range 0..{host.n - 1}")
    if len(set(seq)) != len(seq):
        raise InvalidPathError(f"duplicate vertex in {list(seq)}")
    for a, b in zip(seq, seq[1:]):
        if not host.has_edge(a, b):
            raise InvalidPathError(f"consecutive vertices {a} and {b} are not adjacent")
    for x in range(len(seq)):
        for y in range(x + 2, len(seq)):
            if host.has_edge(seq[x], seq[y]):
                raise InvalidPathError(
                    f"adjacent non-consecutive pair ({seq[x]}, {seq[y]}) shortcuts the path"
                )
    increasing = all(a < b for a, b in zip(seq, seq[1:]))
    return InducedPath(seq, increasing)


def max_span(g: PathGraph) -> int:
    """Largest j - i over all edges, path edges included."""
    if g.n == 1:
        return 0
    return max([1] + [j - i for i, j in g.chords])
