import os
import random
import sys

import networkx as nx
import pytest

# Add root to path
sys.path.append(os.getcwd())

from src.services.instance_service import HostFormatError, load_host, rook9
from src.utils.graph6_utils import Graph6Error, graph6_read, graph6_write, host_id
from src.utils.graph_utils import (
    Graph,
    GraphError,
    build_lookup_table,
    canonical_code,
    enumerate_classes,
    induced,
    is_srg,
    iter_bits,
)


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_perm(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def test_iter_bits():
    assert list(iter_bits(0b10110)) == [1, 2, 4]
    assert list(iter_bits(0)) == []


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (0,))


def test_edges_and_components():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert g.edge_count == 3
    assert g.edges() == [(0, 1), (1, 2), (3, 4)]
    assert g.components() == [0b00111, 0b11000]
    assert not g.is_connected()
    assert g.degree(1) == 2


def test_induced_keeps_only_inner_edges():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert induced(path, [0, 2]).edge_count == 0
    sub = induced(path, [2, 1])
    assert sub.has_edge(0, 1)
    with pytest.raises(GraphError):
        induced(path, [0, 0])


def test_labeled_code_round_trip():
    g = Graph.from_edges(5, [(0, 4), (1, 3), (2, 3), (3, 4)])
    assert Graph.from_labeled_code(5, g.labeled_code()) == g
    assert Graph.from_row_major_code(5, g.row_major_code()) == g


def test_class_counts_per_order():
    assert [len(enumerate_classes(m)) for m in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_canonical_code_is_relabeling_invariant():
    rng = random.Random(7)
    for _ in range(20):
        g = random_graph(rng, 6, 0.5)
        h = g.relabel(random_perm(rng, 6))
        assert canonical_code(g) == canonical_code(h)
        assert nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def test_canonical_code_separates_classes():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_code(path) != canonical_code(triangle)
    with pytest.raises(GraphError):
        canonical_code(Graph.empty(2))


def test_lookup_table_agrees_with_canonical_code():
    rng = random.Random(11)
    classes = enumerate_classes(5)
    table = build_lookup_table(5)
    for _ in range(40):
        g = random_graph(rng, 5, rng.choice([0.3, 0.5, 0.7]))
        assert classes[table[g.labeled_code()]].code == canonical_code(g).code


def test_is_srg():
    assert is_srg(rook9()).as_tuple() == (9, 4, 1, 2)
    assert is_srg(Graph.from_networkx(nx.petersen_graph())).as_tuple() == (10, 3, 0, 1)
    assert is_srg(Graph.from_networkx(nx.cycle_graph(5))).as_tuple() == (5, 2, 0, 1)
    assert is_srg(Graph.from_networkx(nx.complete_graph(4))) is None
    assert is_srg(Graph.from_networkx(nx.path_graph(4))) is None


def test_graph6_known_string():
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert graph6_write(triangle) == "Bw"
    assert graph6_read("Bw") == triangle
    assert graph6_read(">>graph6<<Bw\n") == triangle
    assert graph6_read(b"Bw") == triangle


def test_graph6_round_trip_and_long_header():
    g = rook9()
    assert graph6_read(graph6_write(g)) == g
    big = Graph.empty(70)
    assert graph6_read(graph6_write(big)).order == 70


def test_graph6_round_trip_on_random_graphs():
    rng = random.Random(6)
    for _ in range(1000):
        n = rng.randint(1, 50)
        g = random_graph(rng, n, rng.random())
        assert graph6_read(graph6_write(g)) == g


def test_graph6_rejects_damaged_strings():
    text = graph6_write(rook9())
    with pytest.raises(Graph6Error, match="truncated"):
        graph6_read(text[:-1])
    with pytest.raises(Graph6Error, match="trailing garbage"):
        graph6_read(text + "?")
    with pytest.raises(Graph6Error, match="outside the graph6 range"):
        graph6_read(text[:-1] + chr(127))
    with pytest.raises(Graph6Error, match="outside the graph6 range"):
        graph6_read(text[:3] + "!" + text[4:])


def test_graph6_rejects_nonzero_padding(tmp_path):
    # a triangle has three edge bits, so the last character carries three padding bits
    assert graph6_read("Bw").edge_count == 3
    with pytest.raises(Graph6Error, match="padding"):
        graph6_read("Bx")
    path = tmp_path / "padded.g6"
    path.write_text("Bx\n")
    with pytest.raises(HostFormatError):
        load_host(str(path))


@pytest.mark.parametrize("text", ["", "   ", "B", "Bww", "B w"])
def test_graph6_rejects_malformed(text):
    with pytest.raises(Graph6Error):
        graph6_read(text)


def test_host_id_is_stable_across_codec():
    g = rook9()
    assert host_id(g) == host_id(graph6_read(graph6_write(g)))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
