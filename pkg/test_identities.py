import os
import sys

import pytest
import sympy

# Add root to path
sys.path.append(os.getcwd())

from src.services.formula_service import closed_form
from src.services.identity_service import (
    EDGES,
    C,
    Equation,
    UnknownSymbolError,
    check_identity,
    check_all,
    default_forms,
    equation_table,
    get_equation,
    parse_side,
    residual_poly,
    spot_check,
)


def test_table_has_every_relation():
    names = [eq.name for eq in equation_table()]
    assert len(names) == len(set(names))
    assert sum(1 for eq in equation_table() if eq.group == "l") == 9
    assert sum(1 for eq in equation_table() if eq.group == "m") == 21
    assert {"n1", "n36", "n57", "m13-paths", "sum-n"} <= set(names)


def test_parsing_helpers():
    x = sympy.Symbol("x")
    assert sympy.expand(C(x, 2) - x * (x - 1) / 2) == 0
    assert parse_side("E") == EDGES
    assert parse_side("E") != sympy.E


@pytest.mark.parametrize("name", ["n1", "n8", "n54", "l8", "n2", "l7", "m13", "m21"])
def test_identities_that_hold(name):
    check = check_identity(get_equation(name))
    assert check.status == "holds"
    assert check.readings[0].residual == "0"


@pytest.mark.parametrize("name", ["sum-l", "sum-m", "sum-n"])
def test_sum_identities_hold(name):
    assert check_identity(get_equation(name)).status == "holds"


def test_cube_relation_needs_repair():
    check = check_identity(get_equation("n21"))
    assert check.status == "repaired"
    assert not check.readings[0].holds
    assert check.readings[1].reading == "repaired"
    assert check.readings[1].holds
    assert check.note


def test_grouped_reading_of_path_relation():
    check = check_identity(get_equation("n48"))
    assert check.status == "repaired"
    assert [r.reading for r in check.holding_readings()] == ["grouped"]


@pytest.mark.parametrize("name", ["l4", "l5", "m7", "n12", "n56"])
def test_relations_with_misprinted_terms(name):
    check = check_identity(get_equation(name))
    assert check.status == "repaired"
    assert [r.reading for r in check.holding_readings()] == ["repaired"]
    assert check.note


def test_construction_without_repair_is_reported():
    check = check_identity(get_equation("n40"))
    assert check.status == "fails"
    assert check.readings[0].residual != "0"
    assert "n40" in [c.name for c in check_all().failing()]


def test_summary_of_all_relations():
    summary = check_all().summary()
    assert summary["repaired"] == 7
    assert summary["fails"] == 1
    assert summary["holds"] == summary["total"] - 8


def test_mutated_formula_breaks_relation():
    forms = default_forms()
    forms["n2"] = 2 * closed_form("n2")
    check = check_identity(get_equation("n2"), forms)
    assert check.status == "fails"
    assert check.readings[0].residual != "0"
    assert check.suggestions


def test_residual_is_stable():
    eq = get_equation("n21")
    first = residual_poly(eq.lhs, eq.rhs)
    second = residual_poly(eq.lhs, eq.rhs)
    assert first == second
    assert not first.is_zero


def test_unknown_symbol():
    eq = Equation("bad", "construction", "q7", "n1", "q_7=n_1")
    with pytest.raises(UnknownSymbolError):
        check_identity(eq)


def test_spot_check_at_rook():
    failing = [
        (name, v.reading)
        for name, verdicts in spot_check(9, 4, 0).items()
        for v in verdicts
        if not v.holds
    ]
    assert failing == [("n21", "printed"), ("l5", "printed")]


def test_symbolic_holds_implies_numeric_holds():
    numeric = spot_check(99, 14, 0)
    for eq in equation_table():
        check = check_identity(eq)
        for sym, num in zip(check.readings, numeric[eq.name]):
            if sym.holds:
                assert num.holds, (eq.name, sym.reading)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
