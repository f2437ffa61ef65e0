"""
Dense undirected graphs on bit-vector rows, canonical codes for small graphs,
labeled-code classification tables and strongly-regular parameter detection.

Two integer encodings of a labeled graph on m vertices are used:

* row-major code: the upper-triangle pairs (0,1), (0,2), ..., (0,m-1), (1,2), ...
  read as a bit string, first pair most significant. The canonical code is the
  minimum of this value over all vertex orderings.
* labeled code (colex): pair (i, j) with i < j owns bit j(j-1)/2 + i. Appending
  a vertex at position j adds a contiguous block of j bits at shift j(j-1)/2,
  which is what the census engines update incrementally.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)

MAX_ORDER = 1024
MAX_CANONICAL_ORDER = 8
MAX_TABLE_ORDER = 6


class GraphError(ValueError):
    """Invalid adjacency, vertex subset or order."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_count(m: int) -> int:
    return m * (m - 1) // 2


def colex_shift(position: int) -> int:
    """Bit offset of the block contributed by the vertex at this position."""
    return position * (position - 1) // 2


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def as_tuple(self):
        return (self.n, self.k, self.lam, self.mu)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    order: int
    code: int

    @property
    def hex(self) -> str:
        width = max(1, (pair_count(self.order) + 3) // 4)
        return f"{self.code:0{width}x}"

    def __str__(self):
        return self.hex


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise GraphError(f"Graph order {self.order} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.order:
            raise GraphError(f"Expected {self.order} adjacency rows, got {len(self.adj)}")
        full = (1 << self.order) - 1
        for u, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(f"Row {u} has bits outside 0..{self.order - 1}")
            if row >> u & 1:
                raise GraphError(f"Self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"Adjacency not symmetric at ({u}, {v})")

    # --- constructors -------------------------------------------------

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"Edge ({u}, {v}) outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        nodes = list(G.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in G.edges() if u != v]
        return cls.from_edges(len(nodes), edges)

    @classmethod
    def from_row_major_code(cls, order: int, code: int) -> "Graph":
        pairs = _row_major_pairs(order)
        top = len(pairs) - 1
        return cls.from_edges(order, [p for t, p in enumerate(pairs) if code >> (top - t) & 1])

    @classmethod
    def from_labeled_code(cls, order: int, code: int) -> "Graph":
        pairs = _colex_pairs(order)
        return cls.from_edges(order, [p for t, p in enumerate(pairs) if code >> t & 1])

    # --- queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> list:
        return list(iter_bits(self.adj[u]))

    def edges(self) -> list:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def components(self) -> list:
        """Vertex bitmasks of the connected components, ordered by lowest vertex."""
        remaining = (1 << self.order) - 1
        found = []
        while remaining:
            seed = remaining & -remaining
            comp, frontier = seed, seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~comp
                comp |= frontier
            found.append(comp)
            remaining &= ~comp
        return found

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex u becomes perm[u]."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("Relabeling is not a permutation of the vertex set")
        rows = [0] * self.order
        for u, row in enumerate(self.adj):
            new = 0
            for v in iter_bits(row):
                new |= 1 << perm[v]
            rows[perm[u]] = new
        return Graph(self.order, tuple(rows))

    def labeled_code(self) -> int:
        code = 0
        for j in range(1, self.order):
            code |= (self.adj[j] & ((1 << j) - 1)) << colex_shift(j)
        return code

    def row_major_code(self) -> int:
        return _row_major_value(self.order, self.adj, range(self.order))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.order))
        G.add_edges_from(self.edges())
        return G

    def to_numpy(self) -> np.ndarray:
        A = np.zeros((self.order, self.order), dtype=np.int64)
        for u, row in enumerate(self.adj):
            for v in iter_bits(row):
                A[u, v] = 1
        return A


# --- pair orders ----------------------------------------------------------

@lru_cache(maxsize=None)
def _row_major_pairs(m: int) -> tuple:
    return tuple((i, j) for i in range(m) for j in range(i + 1, m))


@lru_cache(maxsize=None)
def _colex_pairs(m: int) -> tuple:
    return tuple((i, j) for j in range(m) for i in range(j))


def _row_major_value(order, adj, ordering) -> int:
    code = 0
    for i, j in _row_major_pairs(order):
        code = (code << 1) | (adj[ordering[i]] >> ordering[j] & 1)
    return code


def _canonical_int(order: int, adj: Sequence[int]) -> int:
    if order <= 1:
        return 0
    return min(_row_major_value(order, adj, p) for p in itertools.permutations(range(order)))


def canonical_code(g: Graph) -> CanonicalCode:
    """Minimum row-major upper-triangle code over all orderings of the vertices."""
    if not 3 <= g.order <= MAX_CANONICAL_ORDER:
        raise GraphError(f"canonical_code supports orders 3..{MAX_CANONICAL_ORDER}, got {g.order}")
    return CanonicalCode(g.order, _canonical_int(g.order, g.adj))


def component_codes(g: Graph) -> tuple:
    """Sorted (order, canonical code) pairs of the connected components of g."""
    codes = []
    for comp in g.components():
        part = induced(g, list(iter_bits(comp)))
        codes.append((part.order, _canonical_int(part.order, part.adj)))
    return tuple(sorted(codes))


# --- classification tables ------------------------------------------------

@dataclass(frozen=True)
class ClassOrbit:
    """One isomorphism class of labeled graphs on m vertices."""
    order: int
    code: int
    edges: int
    labeled: tuple


@lru_cache(maxsize=None)
def _permutation_bit_maps(m: int) -> tuple:
    pairs = _colex_pairs(m)
    where = {pair: t for t, pair in enumerate(pairs)}
    maps = []
    for p in itertools.permutations(range(m)):
        maps.append(tuple(where[(min(p[i], p[j]), max(p[i], p[j]))] for i, j in pairs))
    return tuple(maps)


@lru_cache(maxsize=None)
def _colex_to_row_major_shifts(m: int) -> tuple:
    rm = {pair: t for t, pair in enumerate(_row_major_pairs(m))}
    top = pair_count(m) - 1
    return tuple(top - rm[pair] for pair in _colex_pairs(m))


def _to_row_major(m: int, labeled: int) -> int:
    shifts = _colex_to_row_major_shifts(m)
    code = 0
    for t in iter_bits(labeled):
        code |= 1 << shifts[t]
    return code


@lru_cache(maxsize=None)
def enumerate_classes(m: int) -> tuple:
    """
    All isomorphism classes on m vertices (1..6), sorted by (edges, canonical code).

    Each labeled code is assigned together with its whole orbit under the
    m! relabelings, so every code is touched exactly once.
    """
    if not 1 <= m <= MAX_TABLE_ORDER:
        raise GraphError(f"Class enumeration supports orders 1..{MAX_TABLE_ORDER}, got {m}")
    maps = _permutation_bit_maps(m)
    size = 1 << pair_count(m)
    seen = bytearray(size)
    found = []
    for code in range(size):
        if seen[code]:
            continue
        bits = list(iter_bits(code))
        orbit = set()
        for mp in maps:
            image = 0
            for t in bits:
                image |= 1 << mp[t]
            orbit.add(image)
        for member in orbit:
            seen[member] = 1
        canon = min(_to_row_major(m, member) for member in orbit)
        found.append(ClassOrbit(m, canon, len(bits), tuple(sorted(orbit))))
    found.sort(key=lambda c: (c.edges, c.code))
    logger.debug(f"Order {m}: {len(found)} classes over {size} labeled codes")
    return tuple(found)


@lru_cache(maxsize=None)
def build_lookup_table(m: int) -> tuple:
    """table[labeled code] = index of its class in enumerate_classes(m)."""
    classes = enumerate_classes(m)
    table = [0] * (1 << pair_count(m))
    for index, cls in enumerate(classes):
        for member in cls.labeled:
            table[member] = index
    return tuple(table)


# --- subgraphs and parameters ---------------------------------------------

def induced(g: Graph, subset: Sequence[int]) -> Graph:
    """Induced subgraph on subset, vertex i of the result being subset[i]."""
    subset = list(subset)
    if len(set(subset)) != len(subset):
        raise GraphError("Duplicate vertex in subset")
    for v in subset:
        if not 0 <= v < g.order:
            raise GraphError(f"Vertex {v} outside 0..{g.order - 1}")
    rows = []
    for u in subset:
        row = 0
        for b, v in enumerate(subset):
            if g.adj[u] >> v & 1:
                row |= 1 << b
        rows.append(row)
    return Graph(len(subset), tuple(rows))


def is_srg(g: Graph):
    """Return SrgParams if g is strongly regular, otherwise None."""
    n = g.order
    if n < 3:
        return None
    A = g.to_numpy()
    degrees = A.sum(axis=1)
    k = int(degrees[0])
    if not (degrees == k).all() or k == 0 or k == n - 1:
        return None
    A2 = A @ A
    adjacent = A.astype(bool)
    apart = ~adjacent & ~np.eye(n, dtype=bool)
    lam_values = A2[adjacent]
    mu_values = A2[apart]
    if lam_values.min() != lam_values.max() or mu_values.min() != mu_values.max():
        return None
    return SrgParams(n, k, int(lam_values[0]), int(mu_values[0]))
