"""
Isomorphism-class catalogs of small orders, the srg(n,k,1,2) feasibility
filter, structural anchor classes and the coefficient tables used by census
completion.
"""
import itertools
import json
import logging
import os
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from ..utils.graph_utils import (
    CanonicalCode,
    Graph,
    GraphError,
    MAX_TABLE_ORDER,
    build_lookup_table,
    component_codes,
    enumerate_classes,
    induced,
)
from ..utils.report_utils import write_text

logger = logging.getLogger(__name__)

LAMBDA_BOUND = 1
MU_BOUND = 2


class AnchorError(LookupError):
    """A structurally forced class is missing from the feasible catalog."""


@dataclass(frozen=True)
class IsoClass:
    index: int
    order: int
    code: CanonicalCode
    edges: int
    connected: bool
    components: tuple
    feasible: bool

    def graph(self) -> Graph:
        return Graph.from_row_major_code(self.order, self.code.code)

    def as_row(self) -> dict:
        return {
            "index": self.index,
            "code": self.code.hex,
            "edges": self.edges,
            "connected": self.connected,
            "feasible": self.feasible,
        }


@dataclass(frozen=True, eq=False)
class IsoCatalog:
    order: int
    classes: tuple
    lookup: tuple

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, index) -> IsoClass:
        return self.classes[index]

    def classify(self, g: Graph) -> int:
        if g.order != self.order:
            raise GraphError(f"Cannot classify an order-{g.order} graph in the order-{self.order} catalog")
        return self.lookup[g.labeled_code()]

    def feasible_indices(self) -> list:
        return [c.index for c in self.classes if c.feasible]

    def infeasible_indices(self) -> list:
        return [c.index for c in self.classes if not c.feasible]

    def disconnected_indices(self) -> list:
        return [c.index for c in self.classes if not c.connected]

    def rows(self, feasible_only=False) -> list:
        return [c.as_row() for c in self.classes if c.feasible or not feasible_only]


def is_feasible(g: Graph) -> bool:
    """Adjacent pairs share at most one neighbor inside g, non-adjacent pairs at most two."""
    for u, v in itertools.combinations(range(g.order), 2):
        common = (g.adj[u] & g.adj[v]).bit_count()
        if common > (LAMBDA_BOUND if g.has_edge(u, v) else MU_BOUND):
            return False
    return True


@lru_cache(maxsize=None)
def build_catalog(m: int) -> IsoCatalog:
    if not 1 <= m <= MAX_TABLE_ORDER:
        raise GraphError(f"Catalogs exist for orders 1..{MAX_TABLE_ORDER}, got {m}")
    classes = []
    for index, orbit in enumerate(enumerate_classes(m)):
        g = Graph.from_row_major_code(m, orbit.code)
        comps = component_codes(g)
        classes.append(IsoClass(
            index=index,
            order=m,
            code=CanonicalCode(m, orbit.code),
            edges=orbit.edges,
            connected=len(comps) == 1,
            components=comps,
            feasible=is_feasible(g),
        ))
    catalog = IsoCatalog(m, tuple(classes), build_lookup_table(m))
    logger.info(f"✓ Catalog of order {m}: {len(classes)} classes, {len(catalog.feasible_indices())} feasible")
    return catalog


def classify(g: Graph) -> int:
    return build_catalog(g.order).classify(g)


# --- anchors ----------------------------------------------------------------

@dataclass(frozen=True)
class Anchors:
    n1: int
    n2: int
    n3: int
    n12: int

    def as_dict(self) -> dict:
        return {"n1": self.n1, "n2": self.n2, "n3": self.n3, "n12": self.n12}


PRISM_EDGES = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]

ANCHOR_GRAPHS = {
    # two triangles joined by a perfect matching
    "n1": Graph.from_edges(6, PRISM_EDGES),
    # 4-cycle abcd, apex e on ab, apex f on bc
    "n2": Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 1), (5, 2)]),
    # prism minus one matching edge
    "n3": Graph.from_edges(6, PRISM_EDGES[:-1]),
    "n12": Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)]),
}


def cycle_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def cycle_class(m: int) -> int:
    """Index of the m-cycle (K3 for m = 3) in the order-m catalog."""
    return build_catalog(m).classify(cycle_graph(m))


def anchor_classes(catalog: IsoCatalog) -> Anchors:
    if catalog.order != 6:
        raise AnchorError(f"Anchors live in the order-6 catalog, got order {catalog.order}")
    found = {}
    for name, g in ANCHOR_GRAPHS.items():
        index = catalog.classify(g)
        if not catalog[index].feasible:
            raise AnchorError(f"Anchor {name} (class {index}) is not in the feasible set")
        found[name] = index
    if len(set(found.values())) != len(found):
        raise AnchorError(f"Anchor classes are not distinct: {found}")
    return Anchors(**found)


# --- coefficient tables -----------------------------------------------------

def _ref_key(ref) -> str:
    return f"{ref[0]}.{ref[1]}"


def _parse_ref(text):
    order, index = text.split(".")
    return int(order), int(index)


@dataclass(eq=False)
class CoefficientTables:
    """
    split[(A, B)][F]   = q(F; A, B), ordered bipartitions of F into parts inducing A and B.
    overlap[(A, B)][W] = r(W; A, B), ordered covers (S, T) of W with S, T meeting, W[S] = A, W[T] = B.

    A, B and W are (order, class index) references; F is a class index of order m.
    """
    order: int
    split: dict
    overlap: dict

    def to_json(self) -> str:
        data = {
            "order": self.order,
            "split": {
                f"{_ref_key(a)}|{_ref_key(b)}": {str(f): q for f, q in sorted(row.items())}
                for (a, b), row in sorted(self.split.items())
            },
            "overlap": {
                f"{_ref_key(a)}|{_ref_key(b)}": {_ref_key(w): r for w, r in sorted(row.items())}
                for (a, b), row in sorted(self.overlap.items())
            },
        }
        return json.dumps(data, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CoefficientTables":
        data = json.loads(text)
        split, overlap = {}, {}
        for key, row in data["split"].items():
            a, b = (_parse_ref(part) for part in key.split("|"))
            split[(a, b)] = {int(f): q for f, q in row.items()}
        for key, row in data["overlap"].items():
            a, b = (_parse_ref(part) for part in key.split("|"))
            overlap[(a, b)] = {_parse_ref(w): r for w, r in row.items()}
        return cls(int(data["order"]), split, overlap)


def induced_class(g: Graph, subset) -> tuple:
    part = induced(g, subset)
    return part.order, build_lookup_table(part.order)[part.labeled_code()]


@lru_cache(maxsize=None)
def split_coefficients(m: int) -> dict:
    catalog = build_catalog(m)
    table = defaultdict(dict)
    vertices = range(m)
    for F in catalog.classes:
        g = F.graph()
        for a in range(1, m):
            for S in itertools.combinations(vertices, a):
                T = [v for v in vertices if v not in S]
                row = table[(induced_class(g, S), induced_class(g, T))]
                row[F.index] = row.get(F.index, 0) + 1
    return dict(table)


@lru_cache(maxsize=None)
def overlap_coefficients(m: int) -> dict:
    table = defaultdict(dict)
    for w in range(1, m):
        for W in build_catalog(w).classes:
            g = W.graph()
            vertices = range(w)
            for a in range(1, m):
                b = m - a
                if w < max(a, b):
                    continue
                shared = m - w
                for S in itertools.combinations(vertices, a):
                    A = induced_class(g, S)
                    rest = [v for v in vertices if v not in S]
                    for X in itertools.combinations(S, shared):
                        B = induced_class(g, sorted(rest + list(X)))
                        row = table[(A, B)]
                        key = (w, W.index)
                        row[key] = row.get(key, 0) + 1
    return dict(table)


def build_tables(m: int) -> CoefficientTables:
    if not 2 <= m <= MAX_TABLE_ORDER:
        raise GraphError(f"Coefficient tables exist for orders 2..{MAX_TABLE_ORDER}, got {m}")
    return CoefficientTables(m, split_coefficients(m), overlap_coefficients(m))


def tables_path(m: int, data_dir: str) -> str:
    return os.path.join(data_dir, f"coefficients_m{m}.json")


def load_or_build_tables(m: int, data_dir: str = None) -> CoefficientTables:
    """Reuse the persisted tables in data_dir when present, otherwise build (and persist)."""
    if data_dir is None:
        return build_tables(m)
    path = tables_path(m, data_dir)
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as f:
            logger.debug(f"Loading coefficient tables from {path}")
            return CoefficientTables.from_json(f.read())
    tables = build_tables(m)
    write_text(tables.to_json(), path)
    return tables


def tables_file_matches(m: int, data_dir: str) -> bool:
    """Recompute the order-m tables and compare with the persisted file byte for byte."""
    path = tables_path(m, data_dir)
    if not os.path.exists(path):
        return False
    with open(path, "r", encoding="utf-8") as f:
        return f.read() == build_tables(m).to_json()


@lru_cache(maxsize=None)
def deck_coefficients(m: int) -> dict:
    """deck[(L, M)] = number of vertices of order-m class M whose deletion leaves order-(m-1) class L."""
    if not 2 <= m <= MAX_TABLE_ORDER:
        raise GraphError(f"Deck coefficients exist for orders 2..{MAX_TABLE_ORDER}, got {m}")
    deck = defaultdict(int)
    for M in build_catalog(m).classes:
        g = M.graph()
        for v in range(m):
            _, L = induced_class(g, [u for u in range(m) if u != v])
            deck[(L, M.index)] += 1
    return dict(deck)
