import itertools
import os
import sys

import pytest

# Add root to path
sys.path.append(os.getcwd())

from src.services.catalog_service import (
    ANCHOR_GRAPHS,
    AnchorError,
    CoefficientTables,
    anchor_classes,
    build_catalog,
    build_tables,
    classify,
    cycle_class,
    cycle_graph,
    deck_coefficients,
    induced_class,
    is_feasible,
    load_or_build_tables,
    split_coefficients,
    tables_file_matches,
    tables_path,
)
from src.utils.graph_utils import Graph, GraphError


def test_catalog_sizes():
    assert [len(build_catalog(m)) for m in (3, 4, 5, 6)] == [4, 11, 34, 156]
    assert [len(build_catalog(m).feasible_indices()) for m in (3, 4, 5, 6)] == [4, 9, 21, 62]


def test_catalog_order_bounds():
    with pytest.raises(GraphError):
        build_catalog(7)


def test_order3_class_order():
    catalog = build_catalog(3)
    assert catalog.classify(Graph.empty(3)) == 0
    assert catalog.classify(Graph.from_edges(3, [(0, 1)])) == 1
    assert catalog.classify(Graph.from_edges(3, [(0, 1), (1, 2)])) == 2
    assert catalog.classify(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) == 3
    assert catalog.disconnected_indices() == [0, 1]


def test_order4_infeasible_classes():
    catalog = build_catalog(4)
    k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert catalog.infeasible_indices() == [9, 10]
    assert catalog.classify(diamond) == 9
    assert catalog.classify(k4) == 10
    assert not is_feasible(diamond)
    assert is_feasible(cycle_graph(4))


def test_rows_and_codes():
    catalog = build_catalog(4)
    rows = catalog.rows(feasible_only=True)
    assert len(rows) == 9
    assert rows[0] == {"index": 0, "code": "00", "edges": 0, "connected": False, "feasible": True}


def test_cycle_classes_are_feasible():
    for m in (3, 4, 5, 6):
        assert build_catalog(m)[cycle_class(m)].feasible
        assert build_catalog(m)[cycle_class(m)].connected


def test_anchor_classes():
    catalog = build_catalog(6)
    anchors = anchor_classes(catalog)
    found = anchors.as_dict()
    assert len(set(found.values())) == 4
    assert found["n12"] == cycle_class(6)
    prism = ANCHOR_GRAPHS["n1"].relabel([3, 4, 5, 0, 1, 2])
    assert classify(prism) == anchors.n1
    assert catalog[anchors.n3].edges == 8
    assert catalog[anchors.n1].edges == 9


def test_anchor_classes_need_order6():
    with pytest.raises(AnchorError):
        anchor_classes(build_catalog(5))


def test_split_and_overlap_order2():
    tables = build_tables(2)
    single = (1, 0)
    assert tables.split[(single, single)] == {0: 2, 1: 2}
    assert tables.overlap[(single, single)] == {(1, 0): 1}


def test_split_coefficients_of_two_triangles():
    triangle = (3, 3)
    two_triangles = classify(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    row = split_coefficients(6)[(triangle, triangle)]
    assert row[two_triangles] == 2
    assert row.get(cycle_class(6), 0) == 0


def test_overlap_of_two_edges_in_a_path():
    edge = (2, 1)
    path = classify(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert build_tables(4).overlap[(edge, edge)][(3, path)] == 2


def test_anchor_shapes():
    catalog = build_catalog(6)
    anchors = anchor_classes(catalog)
    n3 = catalog[anchors.n3].graph()
    c4 = (4, cycle_class(4))
    assert sum(1 for S in itertools.combinations(range(6), 4) if induced_class(n3, S) == c4) == 1
    n12 = catalog[anchors.n12].graph()
    assert n12.edge_count == 6
    assert n12.is_connected()
    assert all(n12.degree(v) == 2 for v in range(6))


def test_deck_coefficients_cover_every_vertex():
    for m in (4, 5, 6):
        per_class = {}
        for (_, M), count in deck_coefficients(m).items():
            per_class[M] = per_class.get(M, 0) + count
        assert per_class == {i: m for i in range(len(build_catalog(m)))}


def test_deck_of_feasible_class_stays_feasible():
    lower = build_catalog(5)
    upper = build_catalog(6)
    for (L, M), _ in deck_coefficients(6).items():
        if upper[M].feasible:
            assert lower[L].feasible


def test_tables_json_round_trip():
    tables = build_tables(4)
    again = CoefficientTables.from_json(tables.to_json())
    assert again.split == tables.split
    assert again.overlap == tables.overlap


def test_tables_persist_and_match(tmp_path):
    data_dir = str(tmp_path)
    first = load_or_build_tables(4, data_dir)
    assert os.path.exists(tables_path(4, data_dir))
    assert tables_file_matches(4, data_dir)
    second = load_or_build_tables(4, data_dir)
    assert second.split == first.split
    assert not tables_file_matches(5, data_dir)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
