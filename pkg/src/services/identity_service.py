"""
Symbolic audit of the counting relations in src/data/equation_table.py.

Every relation is parsed with sympy, its count symbols are replaced by their
closed forms, n is eliminated through n = 1 + k + k(k-2)/2 and the difference
of the two sides is normalized as a polynomial over QQ in k and n3. A relation
holds when that residual is the zero polynomial.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.parsing.sympy_parser import parse_expr

from ..data.equation_table import EQUATION_ROWS
from ..utils.parallel_utils import run_tasks
from ..utils.report_utils import to_decimal
from .formula_service import FAMILY_ORDER, K, N, N3, closed_form, symbols_of

logger = logging.getLogger(__name__)

EDGES = sympy.Symbol("E")
TRIANGLE_FAR = sympy.Symbol("W")

COUNT_SYMBOLS = tuple(symbols_of("p") + symbols_of("l") + symbols_of("m") + symbols_of("n"))


class UnknownSymbolError(KeyError):
    """An equation references a symbol that has no closed form."""


def C(x, r):
    """Binomial coefficient as a polynomial in x."""
    r = int(r)
    value = sympy.Integer(1)
    for i in range(r):
        value *= (x - i)
    return value / sympy.factorial(r)


def _local_names() -> dict:
    names = {name: sympy.Symbol(name) for name in COUNT_SYMBOLS}
    # E would otherwise parse as Euler's number
    names.update({"n": N, "k": K, "n3": N3, "E": EDGES, "W": TRIANGLE_FAR, "C": C})
    return names


@lru_cache(maxsize=None)
def parse_side(text: str) -> sympy.Expr:
    return parse_expr(text, local_dict=_local_names())


def default_forms() -> dict:
    return {name: closed_form(name) for name in COUNT_SYMBOLS}


@dataclass(frozen=True)
class Equation:
    name: str
    group: str
    lhs: str
    rhs: str
    printed: str
    alternatives: tuple = ()
    note: str = None

    def readings(self) -> list:
        """(label, lhs, rhs) for the printed reading followed by the stored alternatives."""
        return [("printed", self.lhs, self.rhs)] + [(label, l, r) for label, (l, r) in self.alternatives]


@lru_cache(maxsize=None)
def equation_table() -> tuple:
    return tuple(
        Equation(
            name=row["name"],
            group=row["group"],
            lhs=row["lhs"],
            rhs=row["rhs"],
            printed=row["printed"],
            alternatives=tuple(row["alternatives"].items()),
            note=row["note"],
        )
        for row in EQUATION_ROWS
    )


def get_equation(name: str) -> Equation:
    for eq in equation_table():
        if eq.name == name:
            return eq
    raise KeyError(f"No equation named {name!r}")


def _family_substitution(expr: sympy.Expr, forms: dict) -> sympy.Expr:
    mapping = {EDGES: N * K / 2, TRIANGLE_FAR: N - 3 - 3 * (K - 2)}
    for sym in expr.free_symbols:
        if sym in (N, K, N3, EDGES, TRIANGLE_FAR):
            continue
        try:
            mapping[sym] = forms[sym.name]
        except KeyError:
            raise UnknownSymbolError(f"Symbol {sym.name!r} has no closed form") from None
    return sympy.expand(expr.xreplace(mapping).xreplace({N: FAMILY_ORDER}))


def residual_poly(lhs: str, rhs: str, forms: dict = None) -> sympy.Poly:
    forms = forms if forms is not None else default_forms()
    difference = parse_side(lhs) - parse_side(rhs)
    return sympy.Poly(_family_substitution(difference, forms), K, N3, domain="QQ")


@dataclass
class ReadingVerdict:
    reading: str
    lhs: str
    rhs: str
    holds: bool
    residual: str

    def as_dict(self) -> dict:
        return {
            "reading": self.reading,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "residual": self.residual,
        }


@dataclass
class EquationCheck:
    name: str
    group: str
    printed: str
    readings: list
    suggestions: list = field(default_factory=list)
    note: str = None

    @property
    def status(self) -> str:
        """holds (printed reading), repaired (only an alternative holds) or fails."""
        if self.readings[0].holds:
            return "holds"
        if any(r.holds for r in self.readings[1:]):
            return "repaired"
        return "fails"

    def holding_readings(self) -> list:
        return [r for r in self.readings if r.holds]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "group": self.group,
            "printed": self.printed,
            "status": self.status,
            "readings": [r.as_dict() for r in self.readings],
            "suggestions": list(self.suggestions),
            "note": self.note,
        }


def repair_suggestions(poly: sympy.Poly, forms: dict = None) -> list:
    """Symbols s with residual = c * closed_form(s) for a rational constant c."""
    if poly.is_zero:
        return []
    forms = forms if forms is not None else default_forms()
    residual = poly.as_expr()
    found = []
    for name in COUNT_SYMBOLS:
        form = _family_substitution(sympy.Symbol(name), forms)
        if form == 0:
            continue
        ratio = sympy.cancel(residual / form)
        if ratio.is_Rational and ratio != 0:
            found.append(f"adding {ratio}*{name} to the right-hand side makes it hold")
    return found


def check_identity(eq: Equation, forms: dict = None) -> EquationCheck:
    """Verdict for every reading of eq; failures carry the residual polynomial."""
    verdicts = []
    printed_poly = None
    for label, lhs, rhs in eq.readings():
        poly = residual_poly(lhs, rhs, forms)
        if printed_poly is None:
            printed_poly = poly
        verdicts.append(ReadingVerdict(label, lhs, rhs, poly.is_zero, str(poly.as_expr())))
    check = EquationCheck(eq.name, eq.group, eq.printed, verdicts, note=eq.note)
    if not printed_poly.is_zero:
        check.suggestions = repair_suggestions(printed_poly, forms)
        logger.warning(f"✗ {eq.name} fails as printed ({check.status}); residual {verdicts[0].residual}")
    return check


def _check_named(name: str) -> EquationCheck:
    return check_identity(get_equation(name))


@dataclass
class IdentityReport:
    checks: list

    def summary(self) -> dict:
        statuses = [c.status for c in self.checks]
        return {
            "total": len(statuses),
            "holds": statuses.count("holds"),
            "repaired": statuses.count("repaired"),
            "fails": statuses.count("fails"),
        }

    def failing(self) -> list:
        return [c for c in self.checks if c.status != "holds"]

    def by_name(self) -> dict:
        return {c.name: c for c in self.checks}

    def as_dict(self) -> dict:
        return {"summary": self.summary(), "equations": [c.as_dict() for c in self.checks]}


def check_all(forms: dict = None, workers: int = 1) -> IdentityReport:
    table = equation_table()
    if forms is None and workers > 1:
        checks = run_tasks(_check_named, [eq.name for eq in table], workers=workers, desc="Identities")
    else:
        checks = [check_identity(eq, forms) for eq in table]
    report = IdentityReport(checks)
    s = report.summary()
    logger.info(f"✓ {s['holds']}/{s['total']} relations hold as printed, "
                f"{s['repaired']} hold after repair, {s['fails']} fail")
    return report


# --- numeric evaluation ---------------------------------------------------

def _rational(value) -> sympy.Rational:
    q = Fraction(value)
    return sympy.Rational(q.numerator, q.denominator)


def evaluate_reading(lhs: str, rhs: str, values: dict, n: int, k: int) -> tuple:
    """
    Evaluate both sides exactly.

    Args:
        values: symbol name -> int or Fraction for every count symbol used, and "n3"

    Returns:
        (lhs value, rhs value) as Fractions
    """
    env = {N: sympy.Integer(n), K: sympy.Integer(k), EDGES: _rational(Fraction(n * k, 2)),
           TRIANGLE_FAR: sympy.Integer(n - 3 - 3 * (k - 2))}
    if "n3" in values:
        env[N3] = _rational(values["n3"])
    sides = []
    for text in (lhs, rhs):
        expr = parse_side(text)
        for sym in expr.free_symbols:
            if sym in env:
                continue
            if sym.name not in values:
                raise UnknownSymbolError(f"No value supplied for {sym.name!r}")
            env[sym] = _rational(values[sym.name])
        value = expr.xreplace(env)
        sides.append(Fraction(int(value.p), int(value.q)))
    return tuple(sides)


@dataclass
class NumericVerdict:
    name: str
    reading: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "reading": self.reading,
            "lhs": to_decimal(self.lhs),
            "rhs": to_decimal(self.rhs),
            "holds": self.holds,
        }


def check_numeric(eq: Equation, values: dict, n: int, k: int) -> list:
    """One NumericVerdict per reading of eq."""
    return [NumericVerdict(eq.name, label, *evaluate_reading(lhs, rhs, values, n, k))
            for label, lhs, rhs in eq.readings()]


def formula_values(n: int, k: int, n3: int = 0) -> dict:
    """Closed-form values of every count symbol at (n, k, n3), for spot checks."""
    values = {"n3": n3}
    subs = {N: n, K: k, N3: n3}
    for name in COUNT_SYMBOLS:
        v = closed_form(name).subs(subs)
        values[name] = Fraction(int(v.p), int(v.q))
    return values


def spot_check(n: int, k: int, n3: int = 0) -> dict:
    """Numeric verdicts of every reading of every relation with closed-form values."""
    values = formula_values(n, k, n3)
    return {eq.name: check_numeric(eq, values, n, k) for eq in equation_table()}
