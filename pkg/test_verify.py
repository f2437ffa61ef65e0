import json
import os
import random
import sys

import networkx as nx
import pytest
from dotenv import load_dotenv

# Add root to path
sys.path.append(os.getcwd())

# Load env vars
load_dotenv()

from src.config import Config
from src.services import verify_service
from src.services.catalog_service import anchor_classes, build_catalog
from src.services.census_service import CensusService, brute_census
from src.services.instance_service import bvls243, paley9, rook9, save_host
from src.services.verify_service import (
    VerificationReport,
    VerifyService,
    emit_report,
    exit_code,
    measure_n3,
    refine_assignment,
)
from src.ui.cli import main
from src.utils.family_utils import HostNotInFamilyError
from src.utils.graph_utils import Graph

RUN_LONG = os.getenv("RUN_LONG_CENSUS", "0").lower() in ("1", "true")


def run_verify(host, tmp_path, **kwargs):
    service = CensusService(workers=1, data_dir=str(tmp_path), **kwargs)
    return VerifyService(service).verify(host, method="brute")


@pytest.fixture(scope="module")
def rook_report(tmp_path_factory):
    return run_verify(rook9(), tmp_path_factory.mktemp("tables"))


def test_rook_passes(rook_report):
    report = rook_report
    assert report.passed, report.discrepancies
    assert exit_code(report) == 0
    assert report.n3 == "0"
    assert report.host == {"n": "9", "k": "4", "lambda": "1", "mu": "2"}
    assert [report.census[str(m)]["total"] for m in (4, 5, 6)] == ["126", "126", "84"]
    assert report.multiset["6"]["measured_nonzero"] == ["6", "6", "36", "36"]
    assert all(report.infeasible_zero.values())


def test_rook_small_order_checks(rook_report):
    assert rook_report.prop1["measured"] == ["6", "9", "0"]
    assert rook_report.prop1["match"]
    assert rook_report.pentagon_profile["histogram"] == {"0": "36"}
    assert rook_report.pentagon_profile["match"]


def test_rook_anchor_assignment(rook_report):
    anchors = rook_report.anchors
    assert anchors["n1"]["measured"] == "6"
    assert anchors["n12"]["measured"] == "6"
    entry = next(a for a in rook_report.assignment
                 if a["order"] == 6 and a["class"] == anchors["n1"]["class"])
    assert entry["assigned"] == "n1"
    assert rook_report.refinement["consistent"]


def test_rook_equation_findings(rook_report):
    assert [f["name"] for f in rook_report.equation_findings] == ["n40"]
    statuses = {e["name"]: e["status"] for e in rook_report.equations}
    assert statuses["n21"] == "repaired"
    assert statuses["n1"] == "holds"


def test_rook_cross_order_relations_on_measured_counts(rook_report):
    cross = [e for e in rook_report.equations if e["group"] in ("l", "m")]
    assert len(cross) == 30
    for entry in cross:
        assert any(r["holds_numeric"] for r in entry["readings"]), entry["name"]
    l5 = next(e for e in cross if e["name"] == "l5")
    assert [(r["reading"], r["holds_numeric"]) for r in l5["readings"]] == [
        ("printed", False), ("repaired", True)]
    assert (l5["readings"][0]["lhs"], l5["readings"][0]["rhs"]) == ("180", "225")


def test_refinement_reports_disagreeing_coefficients():
    symbols = {"a": (1, "5"), "b": (1, "5"), "c": (2, "7")}
    classes = {(1, 0): (1, "5"), (1, 1): (1, "5"), (2, 0): (2, "7")}
    printed = [("a", "c", 1)]

    left, right, rounds, consistent = refine_assignment(symbols, classes, printed, [((1, 0), (2, 0), 1)])
    assert consistent
    assert rounds == 1
    assert left["a"] == right[(1, 0)]
    assert left["b"] == right[(1, 1)]

    deck = [((1, 0), (2, 0), 1), ((1, 1), (2, 0), 1)]
    _, _, rounds, consistent = refine_assignment(symbols, classes, printed, deck)
    assert not consistent
    assert rounds == 0


def test_altered_deck_row_fails_verification(tmp_path, monkeypatch):
    rows = verify_service._deck_edges()
    lower, upper, coefficient = rows[0]
    altered = [(lower, upper, coefficient + 100)] + rows[1:]
    monkeypatch.setattr(verify_service, "_deck_edges", lambda: altered)
    report = run_verify(rook9(), tmp_path)
    assert not report.refinement["consistent"]
    assert "refinement" in [d["kind"] for d in report.discrepancies]
    assert exit_code(report) == 2


def test_report_contents(rook_report):
    assert len(rook_report.formula_rows) == 92
    assert ["n24", "n28", "n55"] in rook_report.identical_formulas
    assert ["n50", "n56"] in rook_report.identical_formulas
    assert rook_report.n3_feasible["lower"] == "0"


def test_report_round_trip(rook_report, tmp_path):
    path = str(tmp_path / "report.json")
    text = emit_report(rook_report, path)
    data = json.loads(text)
    assert data["passed"] is True
    again = VerificationReport.from_dict(data)
    assert again.n3 == rook_report.n3
    assert again.passed
    with open(path, encoding="utf-8") as f:
        assert json.load(f) == data


def test_report_as_csv(rook_report):
    lines = emit_report(rook_report, fmt="csv").splitlines()
    assert lines[0] == "symbol,a,b,value"
    assert len(lines) == 93
    with pytest.raises(ValueError):
        emit_report(rook_report, fmt="xml")


def test_exit_code_with_discrepancies(rook_report):
    data = rook_report.to_dict()
    data["discrepancies"] = [{"kind": "prop1"}]
    report = VerificationReport.from_dict(data)
    assert not report.passed
    assert exit_code(report) == 2


@pytest.mark.parametrize("method", ["brute", "fast"])
def test_report_is_identical_across_thread_counts(method, tmp_path):
    outputs = set()
    for threads in (1, 4, 8):
        service = CensusService(workers=threads, data_dir=str(tmp_path))
        report = VerifyService(service).verify(rook9(), method=method)
        outputs.add((emit_report(report), emit_report(report, fmt="csv")))
    assert len(outputs) == 1


def test_relabeled_rook_and_paley(rook_report, tmp_path):
    perm = list(range(9))
    random.Random(5).shuffle(perm)
    for host in (rook9().relabel(perm), paley9()):
        report = run_verify(host, tmp_path)
        assert report.passed, report.discrepancies
        assert report.n3 == rook_report.n3
        assert report.multiset == rook_report.multiset


def test_verify_refuses_other_hosts(tmp_path):
    with pytest.raises(HostNotInFamilyError):
        run_verify(Graph.from_networkx(nx.petersen_graph()), tmp_path)


def test_measure_n3_needs_order6():
    anchors = anchor_classes(build_catalog(6))
    with pytest.raises(ValueError):
        measure_n3(brute_census(rook9(), 5), anchors)
    assert measure_n3(brute_census(rook9(), 6), anchors) == 0


def test_cli_round_trip(tmp_path):
    host = str(tmp_path / "rook9.g6")
    assert main(["make-graph", "rook9", "--out", host]) == 0

    out = str(tmp_path / "census.csv")
    assert main(["census", host, "--order", "3", "--format", "csv", "--out", out]) == 0
    with open(out, encoding="utf-8") as f:
        assert len(f.read().splitlines()) == 5

    report = str(tmp_path / "report.json")
    assert main(["verify", host, "--method", "brute", "--threads", "1", "--out", report]) == 0
    with open(report, encoding="utf-8") as f:
        assert json.load(f)["passed"] is True


def test_cli_operational_errors(tmp_path):
    petersen = str(tmp_path / "petersen.g6")
    save_host(Graph.from_networkx(nx.petersen_graph()), petersen)
    assert main(["verify", petersen, "--method", "brute"]) == 1
    assert main(["census", str(tmp_path / "missing.g6"), "--order", "3"]) == 1
    assert main(["formulas", "--k", "15"]) == 1


def test_cli_settings(tmp_path, monkeypatch):
    path = str(tmp_path / "user_settings.json")
    monkeypatch.setattr(Config, "USER_SETTINGS_FILE", path)
    monkeypatch.setattr(Config, "CENSUS_WORKERS", 1)
    assert main(["settings", "--threads", "2", "--long"]) == 0
    with open(path, encoding="utf-8") as f:
        saved = json.load(f)
    assert saved["threads"] == 2
    assert saved["long"] is True
    assert Config.load_user_settings()["threads"] == 2


def test_saved_settings_never_enable_transitive(tmp_path, monkeypatch):
    settings = tmp_path / "user_settings.json"
    settings.write_text(json.dumps({"transitive": True}))
    monkeypatch.setattr(Config, "USER_SETTINGS_FILE", str(settings))
    monkeypatch.setattr(Config, "CENSUS_WORKERS", 1)
    monkeypatch.setattr(Config, "DATA_DIR", str(tmp_path / "data"))
    host = str(tmp_path / "path.g6")
    save_host(Graph.from_networkx(nx.path_graph(4)), host)
    args = ["census", host, "--order", "3", "--method", "fast", "--threads", "1"]
    assert main(args) == 0
    assert main(args + ["--transitive"]) == 1


def test_settings_with_null_threads_are_ignored(tmp_path, monkeypatch):
    settings = tmp_path / "user_settings.json"
    settings.write_text(json.dumps({"threads": None, "format": "csv"}))
    monkeypatch.setattr(Config, "USER_SETTINGS_FILE", str(settings))
    monkeypatch.setattr(Config, "CENSUS_WORKERS", 3)
    loaded = Config.load_user_settings()
    assert loaded["threads"] == 3
    assert loaded["format"] == "json"
    assert Config.CENSUS_WORKERS == 3
    assert main(["catalog", "--order", "3", "--out", str(tmp_path / "catalog.json")]) == 0


@pytest.mark.skipif(not RUN_LONG, reason="set RUN_LONG_CENSUS=1 for the full bvls243 verification")
def test_bvls243_verifies(tmp_path):
    service = CensusService(workers=Config.CENSUS_WORKERS, transitive=True, data_dir=str(tmp_path))
    report = VerifyService(service).verify(bvls243(), method="fast")
    assert report.passed, report.discrepancies
    assert report.prop1["measured"] == ["891", "13365", "384912"]
    assert report.pentagon_profile["histogram"] == {"36": "53460"}


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
