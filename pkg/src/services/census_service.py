"""
Induced-subgraph censuses of orders 1..6.

Two engines share the same incremental labeled code (see graph_utils): a
brute-force walk over all m-subsets, partitioned by their largest vertex, and
an ESU walk over connected m-subsets rooted at their smallest vertex. The
ESU counts are completed to a full census by solving for the disconnected
classes from disjoint-pair counts of lower orders.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from ..config import Config
from ..utils.family_utils import check_family
from ..utils.graph6_utils import host_id
from ..utils.graph_utils import Graph, GraphError, MAX_TABLE_ORDER, build_lookup_table, colex_shift, iter_bits
from ..utils.parallel_utils import run_tasks, sum_vectors
from .catalog_service import build_catalog, cycle_class, induced_class, load_or_build_tables

logger = logging.getLogger(__name__)

METHODS = ("brute", "fast", "auto")

# Per-process engine state, set by _init_engine (also inside pool workers).
_ADJ = ()
_M = 0
_TABLE = ()
_SIZE = 0


class CensusBudgetExceeded(RuntimeError):
    """Brute force would visit more subsets than the configured budget."""


class CompletionError(ArithmeticError):
    """The disconnected counts could not be recovered exactly."""


@dataclass(frozen=True)
class CensusResult:
    host_id: str
    order: int
    counts: tuple
    method: str
    complete: bool = True

    @property
    def total(self) -> int:
        return sum(self.counts)

    def rows(self) -> list:
        catalog = build_catalog(self.order)
        return [
            {**catalog[i].as_row(), "count": str(c)}
            for i, c in enumerate(self.counts)
        ]


def _init_engine(adj, m, table):
    global _ADJ, _M, _TABLE, _SIZE
    _ADJ, _M, _TABLE = adj, m, table
    _SIZE = max(table) + 1


def _block(row: int, verts: tuple) -> int:
    """Adjacency bits of a new vertex towards verts, vertex t of verts at bit t."""
    block = 0
    for t, v in enumerate(verts):
        block |= (row >> v & 1) << t
    return block


def _check_order(g: Graph, m: int):
    if not 1 <= m <= MAX_TABLE_ORDER:
        raise GraphError(f"Census order must be in 1..{MAX_TABLE_ORDER}, got {m}")
    if m > g.order:
        raise GraphError(f"Census order {m} exceeds host order {g.order}")


# --- brute force ------------------------------------------------------------

def _brute_from(verts: tuple, code: int, hi: int, counts: list):
    d = len(verts)
    shift = colex_shift(d)
    if d == _M - 1:
        for v in range(hi):
            counts[_TABLE[code | _block(_ADJ[v], verts) << shift]] += 1
        return
    for v in range(_M - d - 1, hi):
        _brute_from(verts + (v,), code | _block(_ADJ[v], verts) << shift, v, counts)


def _brute_top(top: int) -> list:
    counts = [0] * _SIZE
    if _M == 1:
        counts[0] = 1
    else:
        _brute_from((top,), 0, top, counts)
    return counts


def brute_census(g: Graph, m: int, workers: int = 1, long: bool = False) -> CensusResult:
    """
    Classify every m-subset.

    Subsets are grouped by their largest vertex (colex order), one task per
    group; the groups are summed in order.
    """
    _check_order(g, m)
    subsets = math.comb(g.order, m)
    budget = Config.brute_budget(long)
    if subsets > budget:
        raise CensusBudgetExceeded(
            f"C({g.order},{m}) = {subsets} subsets exceeds the brute-force budget {budget}; "
            f"use --method fast (esu+completion)" + ("" if long else " or --long")
        )
    table = build_lookup_table(m)
    tops = range(m - 1, g.order)
    parts = run_tasks(_brute_top, tops, workers=workers, initializer=_init_engine,
                      initargs=(g.adj, m, table), desc=f"Brute census m={m}")
    counts = sum_vectors(parts, len(build_catalog(m)))
    logger.info(f"✓ Brute census of order {m}: {subsets} subsets")
    return CensusResult(host_id(g), m, tuple(counts), "brute")


# --- ESU ------------------------------------------------------------------

def _esu_from(verts: tuple, code: int, ext: int, closed: int, allowed: int, counts: list):
    d = len(verts)
    shift = colex_shift(d)
    if d == _M - 1:
        for w in iter_bits(ext):
            counts[_TABLE[code | _block(_ADJ[w], verts) << shift]] += 1
        return
    while ext:
        low = ext & -ext
        ext ^= low
        w = low.bit_length() - 1
        row = _ADJ[w]
        _esu_from(verts + (w,), code | _block(row, verts) << shift,
                  ext | (row & ~closed & allowed), closed | row | low, allowed, counts)


def _root_state(root: int) -> tuple:
    full = (1 << len(_ADJ)) - 1
    allowed = full & ~((1 << (root + 1)) - 1)
    return (root,), 0, _ADJ[root] & allowed, _ADJ[root] | 1 << root, allowed


def _esu_state(state: tuple) -> list:
    counts = [0] * _SIZE
    if _M == 1:
        counts[0] = 1
    else:
        _esu_from(*state, counts)
    return counts


def _esu_root(root: int) -> list:
    return _esu_state(_root_state(root))


def _second_level_states(root: int) -> list:
    """Split the walk from root by its first extension vertex, in ESU pop order."""
    verts, code, ext, closed, allowed = _root_state(root)
    states = []
    while ext:
        low = ext & -ext
        ext ^= low
        w = low.bit_length() - 1
        row = _ADJ[w]
        states.append(((root, w), _block(row, verts), ext | (row & ~closed & allowed),
                       closed | row | low, allowed))
    return states


def esu_census(g: Graph, m: int, workers: int = 1, transitive: bool = False) -> CensusResult:
    """
    Count every connected m-subset once, by class; disconnected classes stay 0.

    With transitive=True only subsets containing vertex 0 are enumerated and
    scaled by n/m, which is exact for vertex-transitive hosts only.
    """
    _check_order(g, m)
    table = build_lookup_table(m)
    size = len(build_catalog(m))
    if m == 1:
        counts = [g.order]
    elif transitive:
        _init_engine(g.adj, m, table)
        seeds = _second_level_states(0) if m > 2 else []
        if m == 2:
            parts = [_esu_root(0)]
        else:
            parts = run_tasks(_esu_state, seeds, workers=workers, initializer=_init_engine,
                              initargs=(g.adj, m, table), desc=f"ESU m={m} (vertex 0)")
        through_zero = sum_vectors(parts, size)
        counts = []
        for c in through_zero:
            scaled = Fraction(g.order * c, m)
            if scaled.denominator != 1:
                raise CompletionError("host does not look vertex-transitive: "
                                      f"{g.order}*{c}/{m} is not an integer")
            counts.append(scaled.numerator)
    else:
        parts = run_tasks(_esu_root, range(g.order), workers=workers, initializer=_init_engine,
                          initargs=(g.adj, m, table), desc=f"ESU m={m}")
        counts = sum_vectors(parts, size)
    logger.info(f"✓ ESU census of order {m}: {sum(counts)} connected subsets")
    return CensusResult(host_id(g), m, tuple(counts), "esu", complete=False)


# --- completion -----------------------------------------------------------

def _pivot(m: int, index: int) -> tuple:
    """(A, B) for disconnected class index: A its first component, B the rest."""
    g = build_catalog(m)[index].graph()
    first = g.components()[0]
    S = list(iter_bits(first))
    T = [v for v in range(m) if not first >> v & 1]
    return induced_class(g, S), induced_class(g, T)


@lru_cache(maxsize=None)
def _unknown_rank(m: int) -> int:
    """Rank of the split coefficients restricted to the disconnected classes."""
    catalog = build_catalog(m)
    unknowns = catalog.disconnected_indices()
    tables = load_or_build_tables(m)
    matrix = sympy.Matrix([[row.get(F, 0) for F in unknowns] for _, row in sorted(tables.split.items())])
    return matrix.rank()


def complete_disconnected(connected: CensusResult, lower: dict, n: int, data_dir: str = None) -> CensusResult:
    """
    Fill in the disconnected class counts of an order-m ESU census.

    Args:
        connected: ESU result of order m
        lower: order -> complete CensusResult for orders 1..m-1
        n: host order

    Returns:
        complete CensusResult tagged esu+completion
    """
    m = connected.order
    for w in range(1, m):
        if w not in lower or not lower[w].complete:
            raise CompletionError(f"Completion of order {m} needs a complete census of order {w}")
    if m <= 2:
        raise CompletionError("Orders 1 and 2 are counted directly")

    catalog = build_catalog(m)
    unknowns = catalog.disconnected_indices()
    if _unknown_rank(m) != len(unknowns):
        raise CompletionError(f"Order-{m} completion system is singular")

    tables = load_or_build_tables(m, data_dir)
    counts = {i: Fraction(c) for i, c in enumerate(connected.counts) if i not in unknowns}

    def cnt(ref):
        order, index = ref
        return lower[order].counts[index]

    def disjoint_pairs(A, B) -> int:
        overlap = tables.overlap.get((A, B), {})
        return cnt(A) * cnt(B) - sum(r * cnt(W) for W, r in overlap.items())

    for F in sorted(unknowns, key=lambda i: (-catalog[i].edges, i)):
        A, B = _pivot(m, F)
        row = tables.split[(A, B)]
        rest = sum(q * counts[G] for G, q in row.items() if G != F)
        counts[F] = (disjoint_pairs(A, B) - rest) / row[F]

    for (A, B), row in sorted(tables.split.items()):
        if sum(q * counts[F] for F, q in row.items()) != disjoint_pairs(A, B):
            raise CompletionError(f"Completion row {A}|{B} is inconsistent")
    result = []
    for i in range(len(catalog)):
        value = counts[i]
        if value.denominator != 1 or value < 0:
            raise CompletionError(f"Class {i} of order {m} completed to {value}")
        result.append(value.numerator)
    if sum(result) != math.comb(n, m):
        raise CompletionError(f"Completed order-{m} census sums to {sum(result)}, expected C({n},{m})")
    logger.info(f"✓ Completed {len(unknowns)} disconnected classes of order {m}")
    return CensusResult(connected.host_id, m, tuple(result), "esu+completion")


# --- orchestration ----------------------------------------------------------

def small_census(g: Graph, m: int) -> CensusResult:
    """Orders 1 and 2 from the vertex and edge counts."""
    if m == 1:
        counts = (g.order,)
    elif m == 2:
        counts = (math.comb(g.order, 2) - g.edge_count, g.edge_count)
    else:
        raise GraphError(f"small_census handles orders 1 and 2, got {m}")
    return CensusResult(host_id(g), m, counts, "brute")


def resolve_method(g: Graph, m: int, method: str = "auto") -> str:
    if method not in METHODS:
        raise ValueError(f"Unknown census method {method!r}; choose from {', '.join(METHODS)}")
    if method == "auto":
        return "brute" if math.comb(g.order, m) <= Config.AUTO_BRUTE_LIMIT else "fast"
    return method


def census_upto(g: Graph, m: int, method: str = "auto", workers: int = 1, long: bool = False,
                transitive: bool = False, data_dir: str = None) -> dict:
    """Complete censuses of orders 1..m, keyed by order."""
    _check_order(g, m)
    results = {}
    for order in range(1, m + 1):
        if order <= 2:
            results[order] = small_census(g, order)
            continue
        chosen = resolve_method(g, order, method)
        if chosen == "brute":
            results[order] = brute_census(g, order, workers=workers, long=long)
        else:
            partial = esu_census(g, order, workers=workers, transitive=transitive)
            results[order] = complete_disconnected(partial, results, g.order, data_dir)
    return results


def census(g: Graph, m: int, method: str = "auto", workers: int = 1, long: bool = False,
           transitive: bool = False, data_dir: str = None) -> CensusResult:
    if m <= 2:
        _check_order(g, m)
        return small_census(g, m)
    if resolve_method(g, m, method) == "brute":
        return brute_census(g, m, workers=workers, long=long)
    return census_upto(g, m, method="fast", workers=workers, long=long,
                       transitive=transitive, data_dir=data_dir)[m]


def prop1_counts(results: dict) -> tuple:
    """Measured (triangles, induced 4-cycles, induced 5-cycles)."""
    return tuple(results[m].counts[cycle_class(m)] for m in (3, 4, 5))


# --- pentagons through induced paths --------------------------------------

def _pentagons_at(center: int) -> Counter:
    adj = _ADJ
    row_c = adj[center]
    c_bit = 1 << center
    hist = Counter()
    for a in iter_bits(row_c):
        for b in iter_bits(row_c >> (a + 1) << (a + 1)):
            if adj[a] >> b & 1:
                continue
            X = adj[a] & ~(row_c | adj[b] | c_bit | 1 << b)
            Y = adj[b] & ~(row_c | adj[a] | c_bit | 1 << a)
            hist[sum((adj[x] & Y).bit_count() for x in iter_bits(X))] += 1
    return hist


def pentagon_profile(g: Graph, workers: int = 1) -> dict:
    """
    Histogram: number of induced pentagons through an induced path a-c-b -> number of such paths.

    Each path is counted once (center c, unordered ends a, b).
    """
    check_family(g)
    parts = run_tasks(_pentagons_at, range(g.order), workers=workers, initializer=_init_engine,
                      initargs=(g.adj, 3, build_lookup_table(3)), desc="Pentagon profile")
    total = Counter()
    for part in parts:
        total.update(part)
    return dict(sorted(total.items()))


class CensusService:
    """Census runner bound to the configured worker count, budgets and table directory."""

    def __init__(self, workers: int = None, long: bool = False, transitive: bool = False,
                 data_dir: str = None):
        self.workers = workers if workers is not None else Config.CENSUS_WORKERS
        self.long = long
        self.transitive = transitive
        self.data_dir = data_dir if data_dir is not None else Config.DATA_DIR

    def census(self, g: Graph, m: int, method: str = "auto") -> CensusResult:
        return census(g, m, method=method, workers=self.workers, long=self.long,
                      transitive=self.transitive, data_dir=self.data_dir)

    def census_upto(self, g: Graph, m: int, method: str = "auto") -> dict:
        return census_upto(g, m, method=method, workers=self.workers, long=self.long,
                           transitive=self.transitive, data_dir=self.data_dir)

    def pentagon_profile(self, g: Graph) -> dict:
        return pentagon_profile(g, workers=self.workers)
