import itertools
import logging
import os

import numpy as np

from ..utils.graph_utils import Graph, GraphError, is_srg
from ..utils.graph6_utils import Graph6Error, graph6_read, graph6_write
from ..utils.report_utils import write_text

logger = logging.getLogger(__name__)

# Redundancy part of a generator matrix [I6 | A] of the ternary Golay [11,6,5] code.
GOLAY_A = np.array([
    [1, 1, 1, 1, 1],
    [0, 1, 2, 2, 1],
    [1, 0, 1, 2, 2],
    [2, 1, 0, 1, 2],
    [2, 2, 1, 0, 1],
    [1, 2, 2, 1, 0],
], dtype=np.int64)


class ConstructionError(RuntimeError):
    """A built-in construction failed its own consistency check."""


class HostIOError(OSError):
    """Host file could not be read."""


class HostFormatError(ValueError):
    """Host file content is not exactly one valid graph."""


def rook9() -> Graph:
    """3x3 rook graph: cells (r, c), adjacent when they share a row or a column."""
    cells = [(r, c) for r in range(3) for c in range(3)]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(9), 2)
        if cells[i][0] == cells[j][0] or cells[i][1] == cells[j][1]
    ]
    return Graph.from_edges(9, edges)


def paley9() -> Graph:
    """Paley graph over GF(9) = GF(3)[i]/(i^2 + 1); element a + bi is vertex 3a + b."""
    elements = [(a, b) for a in range(3) for b in range(3)]
    squares = set()
    for a, b in elements[1:]:
        squares.add(((a * a - b * b) % 3, (2 * a * b) % 3))
    edges = []
    for x, y in itertools.combinations(range(9), 2):
        (a1, b1), (a2, b2) = elements[x], elements[y]
        if ((a1 - a2) % 3, (b1 - b2) % 3) in squares:
            edges.append((x, y))
    return Graph.from_edges(9, edges)


def golay_generator() -> np.ndarray:
    return np.hstack([np.eye(6, dtype=np.int64), GOLAY_A])


def golay_parity_check() -> np.ndarray:
    return np.hstack([(-GOLAY_A.T) % 3, np.eye(5, dtype=np.int64)])


def golay_min_weight() -> int:
    G = golay_generator()
    best = None
    for message in itertools.product(range(3), repeat=6):
        if not any(message):
            continue
        word = np.array(message, dtype=np.int64) @ G % 3
        weight = int(np.count_nonzero(word))
        best = weight if best is None else min(best, weight)
    return best


def weight_one_syndromes() -> list:
    """Syndromes a*h_j of the 22 weight-one error vectors, as base-3 integers."""
    H = golay_parity_check()
    powers = 3 ** np.arange(5, dtype=np.int64)
    found = []
    for j in range(H.shape[1]):
        for a in (1, 2):
            found.append(int((a * H[:, j] % 3) @ powers))
    return found


def bvls243() -> Graph:
    """
    Coset graph of the perfect ternary Golay code, srg(243, 22, 1, 2).

    Vertices are the 3^5 syndromes, written as base-3 integers; two syndromes
    are adjacent when they differ by the syndrome of a weight-one vector.
    """
    weight = golay_min_weight()
    if weight != 5:
        raise ConstructionError(f"Golay generator has minimum weight {weight}, expected 5")
    connection = weight_one_syndromes()
    if len(set(connection)) != 22 or 0 in connection:
        raise ConstructionError("Weight-one syndromes are not 22 distinct nonzero vectors")

    vectors = np.array(list(itertools.product(range(3), repeat=5)), dtype=np.int64)[:, ::-1]
    powers = 3 ** np.arange(5, dtype=np.int64)
    index = vectors @ powers
    shifts = np.array([[s // 3 ** i % 3 for i in range(5)] for s in connection], dtype=np.int64)

    rows = [0] * 243
    for v, vec in zip(index, vectors):
        for w in (vec + shifts) % 3 @ powers:
            rows[int(v)] |= 1 << int(w)
    g = Graph(243, tuple(rows))

    params = is_srg(g)
    if params is None or params.as_tuple() != (243, 22, 1, 2):
        raise ConstructionError(f"Coset graph is not srg(243,22,1,2): got {params}")
    logger.info("✓ Built coset graph srg(243,22,1,2)")
    return g


GRAPH_BUILDERS = {
    "rook9": rook9,
    "paley9": paley9,
    "bvls243": bvls243,
}


def make_graph(name: str) -> Graph:
    try:
        builder = GRAPH_BUILDERS[name]
    except KeyError:
        raise ValueError(f"Unknown graph {name!r}; choose from {', '.join(GRAPH_BUILDERS)}") from None
    return builder()


def load_host(path: str, format: str = "graph6") -> Graph:
    """Read exactly one graph from a file. SRG membership is not required."""
    if format != "graph6":
        raise HostFormatError(f"Unsupported host format: {format}")
    try:
        with open(path, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise HostIOError(f"Cannot read host file {path}: {e}") from e

    lines = [line for line in raw.splitlines() if line.strip()]
    if not lines:
        raise HostFormatError(f"{path}: empty file, no graph found")
    if len(lines) != 1:
        raise HostFormatError(f"{path}: exactly one graph expected, found {len(lines)}")
    try:
        return graph6_read(lines[0])
    except (Graph6Error, GraphError) as e:
        raise HostFormatError(f"{path}: {e}") from e


def save_host(g: Graph, path: str):
    write_text(graph6_write(g) + "\n", path)
