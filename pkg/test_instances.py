import os
import sys

import networkx as nx
import pytest
from dotenv import load_dotenv

# Add root to path
sys.path.append(os.getcwd())

# Load env vars
load_dotenv()

from src.services.instance_service import (
    HostFormatError,
    HostIOError,
    bvls243,
    golay_min_weight,
    load_host,
    make_graph,
    paley9,
    rook9,
    save_host,
    weight_one_syndromes,
)
from src.utils.family_utils import (
    FamilyError,
    HostNotInFamilyError,
    admissible_valencies,
    check_family,
    eigenvalue_multiplicities,
    order_from_valency,
)
from src.utils.graph_utils import Graph, is_srg


def test_order_from_valency():
    assert order_from_valency(4) == 9
    assert order_from_valency(14) == 99
    assert order_from_valency(22) == 243


@pytest.mark.parametrize("k", [0, 1, 3, 15])
def test_order_from_valency_rejects(k):
    with pytest.raises(FamilyError):
        order_from_valency(k)


def test_admissible_valencies():
    assert admissible_valencies(4) == [4]
    assert admissible_valencies(30) == [4, 14, 22]
    assert admissible_valencies(120) == [4, 14, 22, 112]


def test_spectrum():
    s = eigenvalue_multiplicities(14)
    assert (s.r, s.s, s.f, s.g) == (3, -4, 54, 44)
    assert s.integral
    s = eigenvalue_multiplicities(22)
    assert (s.f, s.g) == (132, 110)
    assert not eigenvalue_multiplicities(8).integral


def test_rook_and_paley():
    r, p = rook9(), paley9()
    assert is_srg(r).as_tuple() == (9, 4, 1, 2)
    assert is_srg(p).as_tuple() == (9, 4, 1, 2)
    assert nx.is_isomorphic(r.to_networkx(), p.to_networkx())


def test_golay_pieces():
    assert golay_min_weight() == 5
    syndromes = weight_one_syndromes()
    assert len(set(syndromes)) == 22
    assert 0 not in syndromes


def test_bvls243_is_srg():
    g = bvls243()
    assert g.order == 243
    assert check_family(g).as_tuple() == (243, 22, 1, 2)


def test_check_family_rejects():
    with pytest.raises(HostNotInFamilyError):
        check_family(Graph.from_networkx(nx.petersen_graph()))
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(HostNotInFamilyError):
        check_family(two_triangles)


def test_make_graph():
    assert make_graph("rook9") == rook9()
    with pytest.raises(ValueError):
        make_graph("clebsch")


def test_save_and_load_host(tmp_path):
    path = str(tmp_path / "rook9.g6")
    save_host(rook9(), path)
    assert load_host(path) == rook9()


def test_load_host_errors(tmp_path):
    with pytest.raises(HostIOError):
        load_host(str(tmp_path / "missing.g6"))

    empty = tmp_path / "empty.g6"
    empty.write_text("\n")
    with pytest.raises(HostFormatError):
        load_host(str(empty))

    two = tmp_path / "two.g6"
    two.write_text("Bw\nBw\n")
    with pytest.raises(HostFormatError, match="exactly one graph"):
        load_host(str(two))

    bad = tmp_path / "bad.g6"
    bad.write_text("Bww\n")
    with pytest.raises(HostFormatError):
        load_host(str(bad))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
