import os
import sys
from fractions import Fraction

import pytest

# Add root to path
sys.path.append(os.getcwd())

from src.services.formula_service import (
    AffineCount,
    FormulaIntegralityError,
    InfeasibleN3Error,
    eval_l,
    eval_m,
    eval_n,
    eval_order3,
    eval_p,
    feasible_n3_range,
    formula_rows,
    formula_set,
    identical_formula_groups,
    instantiate,
)


def test_cycle_counts():
    assert eval_p(9, 4) == (6, 9, 0)
    assert eval_p(243, 22) == (891, 13365, 384912)
    assert eval_p(99, 14)[2] == 33264


def test_order3_counts():
    assert eval_order3(9, 4) == (6, 36, 36, 6)


def test_order4_and_order5_counts_at_rook():
    assert eval_l(9, 4) == (0, 0, 9, 36, 36, 0, 0, 9, 36)
    m = eval_m(9, 4)
    assert sum(m) == 126
    assert {i + 1: v for i, v in enumerate(m) if v} == {10: 9, 13: 36, 16: 36, 19: 9, 20: 36}


def test_order6_counts_at_rook():
    values = instantiate(formula_set(9, 4), 0)
    assert len(values) == 62
    assert sum(values) == 84
    assert {i + 1: v for i, v in enumerate(values) if v} == {1: 6, 2: 36, 6: 36, 12: 6}


def test_affine_counts_are_exact():
    counts = eval_n(99, 14)
    assert counts[0] == AffineCount(Fraction(1386), Fraction(-1, 3))
    assert counts[2] == AffineCount(Fraction(0), Fraction(1))
    assert counts[35].a == 101286108
    assert sum(c.b for c in counts) == 0


def test_infeasible_n3():
    fs = formula_set(9, 4)
    with pytest.raises(InfeasibleN3Error) as info:
        instantiate(fs, 3)
    assert (5, -3) in info.value.offenders
    with pytest.raises(InfeasibleN3Error):
        instantiate(fs, -1)


def test_feasible_n3_range():
    r = feasible_n3_range(9, 4)
    assert r.values() == [0]
    assert not r.is_empty

    r = feasible_n3_range(99, 14)
    assert r.modulus == 3
    assert r.residues == (0,)
    assert r.upper is not None and r.upper <= 4158
    assert not r.contains(1)


def test_non_family_parameters_are_not_integral():
    with pytest.raises(FormulaIntegralityError):
        eval_p(10, 4)


def test_identical_formula_groups():
    groups = identical_formula_groups()
    assert (24, 28, 55) in groups
    assert (50, 56) in groups


def test_formula_rows():
    rows = formula_rows(formula_set(9, 4), 0)
    assert len(rows) == 62
    assert rows[0] == {"index": 1, "a": "6", "b": "-1/3", "value": "6"}


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
