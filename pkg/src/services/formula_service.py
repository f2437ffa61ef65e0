"""
Exact evaluation of the closed-form subgraph counts of srg(n, k, 1, 2).

Order-six counts are affine in the free parameter n3 and are carried as
AffineCount(a, b) meaning a + b*n3, with a and b exact rationals.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.parsing.sympy_parser import parse_expr

from ..data.closed_forms import L_FORMS, M_FORMS, N_FORMS, ORDER3_FORMS, P_FORMS
from ..utils.report_utils import to_decimal

logger = logging.getLogger(__name__)

N, K, N3 = sympy.symbols("n k n3")
FAMILY_ORDER = 1 + K + K * (K - 2) / 2

FORM_TABLES = {"p": P_FORMS, "l": L_FORMS, "m": M_FORMS, "n": N_FORMS, "t": ORDER3_FORMS}


class FormulaIntegralityError(ArithmeticError):
    def __init__(self, symbol, value):
        self.symbol = symbol
        self.value = value
        super().__init__(f"{symbol} evaluates to non-integral {to_decimal(value)}")


class InfeasibleN3Error(ValueError):
    def __init__(self, n3, offenders):
        self.n3 = n3
        self.offenders = list(offenders)
        listing = ", ".join(f"n{i}={to_decimal(v)}" for i, v in self.offenders) or "n3 must be non-negative"
        super().__init__(f"n3={n3} is infeasible: {listing}")


def _to_fraction(value) -> Fraction:
    if not value.is_Rational:
        raise TypeError(f"Expected an exact rational, got {value}")
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def closed_form(symbol: str) -> sympy.Expr:
    """sympy expression in n, k, n3 for a symbol such as 'p5', 'l4', 'm13', 'n21' or 't2'."""
    family, index = symbol[0], symbol[1:]
    try:
        text = FORM_TABLES[family][int(index)]
    except (KeyError, ValueError):
        raise KeyError(f"No closed form for symbol {symbol!r}") from None
    return parse_expr(text, local_dict={"n": N, "k": K, "n3": N3})


def symbols_of(family: str) -> list:
    return [f"{family}{i}" for i in sorted(FORM_TABLES[family])]


def _evaluate(symbol: str, n: int, k: int, n3=0) -> Fraction:
    return _to_fraction(closed_form(symbol).subs({N: n, K: k, N3: n3}))


def _integral(symbol: str, value: Fraction) -> int:
    if value.denominator != 1:
        raise FormulaIntegralityError(symbol, value)
    return value.numerator


@dataclass(frozen=True)
class AffineCount:
    a: Fraction
    b: Fraction

    def at(self, n3) -> Fraction:
        return self.a + self.b * n3

    def __str__(self):
        if self.b == 0:
            return to_decimal(self.a)
        return f"{to_decimal(self.a)} + ({to_decimal(self.b)})*n3"


def eval_p(n: int, k: int) -> tuple:
    """Triangles, quadrilaterals and pentagons."""
    return tuple(_integral(s, _evaluate(s, n, k)) for s in symbols_of("p"))


def eval_l(n: int, k: int) -> tuple:
    return tuple(_integral(s, _evaluate(s, n, k)) for s in symbols_of("l"))


def eval_m(n: int, k: int) -> tuple:
    return tuple(_integral(s, _evaluate(s, n, k)) for s in symbols_of("m"))


def eval_order3(n: int, k: int) -> tuple:
    """Counts of the order-3 classes in catalog order: empty, K2+K1, P3, K3."""
    return tuple(_integral(s, _evaluate(s, n, k)) for s in symbols_of("t"))


def eval_n(n: int, k: int) -> tuple:
    counts = []
    for s in symbols_of("n"):
        a = _evaluate(s, n, k, 0)
        b = _evaluate(s, n, k, 1) - a
        counts.append(AffineCount(a, b))
    return tuple(counts)


@dataclass(frozen=True)
class FormulaSet:
    n: int
    k: int
    p: tuple
    l: tuple
    m: tuple
    counts: tuple
    order3: tuple


def formula_set(n: int, k: int) -> FormulaSet:
    return FormulaSet(n, k, eval_p(n, k), eval_l(n, k), eval_m(n, k), eval_n(n, k), eval_order3(n, k))


def instantiate(fs: FormulaSet, n3: int) -> tuple:
    """The 62 order-six counts at n3; every entry must be a non-negative integer."""
    if n3 < 0:
        raise InfeasibleN3Error(n3, [])
    values = [count.at(n3) for count in fs.counts]
    offenders = [(i, v) for i, v in enumerate(values, start=1) if v < 0 or v.denominator != 1]
    if offenders:
        raise InfeasibleN3Error(n3, offenders)
    return tuple(v.numerator for v in values)


@dataclass(frozen=True)
class N3Range:
    """
    Feasible values of n3: x >= lower, x <= upper (None if unbounded), x mod modulus in residues.

    lower_binding/upper_binding name the n-indices whose sign constraint gives the
    bound; blocking lists n-indices that are infeasible for every n3.
    """
    n: int
    k: int
    modulus: int
    residues: tuple
    lower: int
    upper: int
    lower_binding: tuple
    upper_binding: tuple
    blocking: tuple

    def contains(self, x: int) -> bool:
        if self.blocking or x < self.lower or (self.upper is not None and x > self.upper):
            return False
        return x % self.modulus in self.residues

    @property
    def is_empty(self) -> bool:
        if self.blocking or not self.residues:
            return True
        if self.upper is None:
            return False
        return not any(self.lower + (r - self.lower) % self.modulus <= self.upper for r in self.residues)

    def values(self) -> list:
        if self.upper is None:
            raise ValueError("n3 range is unbounded above")
        return [x for x in range(self.lower, self.upper + 1) if self.contains(x)]

    def as_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "residues": list(self.residues),
            "lower": str(self.lower),
            "upper": None if self.upper is None else str(self.upper),
            "lower_binding": list(self.lower_binding),
            "upper_binding": list(self.upper_binding),
            "blocking": list(self.blocking),
            "empty": self.is_empty,
        }


def feasible_n3_range(n: int, k: int) -> N3Range:
    counts = eval_n(n, k)
    modulus = 1
    for c in counts:
        modulus = math.lcm(modulus, c.a.denominator, c.b.denominator)
    residues = tuple(r for r in range(modulus) if all(c.at(r).denominator == 1 for c in counts))

    lows, highs, blocking = {}, {}, []
    for i, c in enumerate(counts, start=1):
        if c.b > 0:
            lows[i] = math.ceil(-c.a / c.b)
        elif c.b < 0:
            highs[i] = math.floor(c.a / -c.b)
        elif c.a < 0 or c.a.denominator != 1:
            blocking.append(i)

    lower = max([0] + list(lows.values()))
    lower_binding = tuple(i for i, v in lows.items() if v == lower and lower > 0)
    upper = min(highs.values()) if highs else None
    upper_binding = tuple(i for i, v in highs.items() if v == upper)
    result = N3Range(n, k, modulus, residues, lower, upper, lower_binding, upper_binding, tuple(blocking))
    if result.is_empty:
        logger.warning(f"✗ No feasible n3 for (n, k) = ({n}, {k})")
    return result


def identical_formula_groups(family_relation: bool = False) -> list:
    """Groups of n-indices whose closed forms coincide, as printed or after n = 1 + k + k(k-2)/2."""
    buckets = {}
    for s in symbols_of("n"):
        expr = closed_form(s)
        if family_relation:
            expr = expr.subs(N, FAMILY_ORDER)
        key = sympy.srepr(sympy.expand(expr))
        buckets.setdefault(key, []).append(int(s[1:]))
    return sorted(tuple(group) for group in buckets.values() if len(group) > 1)


def formula_rows(fs: FormulaSet, n3: int = None) -> list:
    rows = []
    for i, count in enumerate(fs.counts, start=1):
        row = {"index": i, "a": to_decimal(count.a), "b": to_decimal(count.b)}
        if n3 is not None:
            row["value"] = to_decimal(count.at(n3))
        rows.append(row)
    return rows
