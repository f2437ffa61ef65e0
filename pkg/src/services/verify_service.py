"""
End-to-end check of a host srg(n, k, 1, 2) against the closed-form counts and
the counting relations: censuses of orders 3..6, the measured n3, multiset
matches per order, the triangle/quadrilateral/pentagon counts, the pentagon
profile, an index assignment and a numeric pass over every relation.
"""
import logging
import math
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..utils.family_utils import check_family
from ..utils.graph_utils import Graph
from ..utils.report_utils import dump_json, render_table, to_decimal, write_text
from .catalog_service import anchor_classes, build_catalog, cycle_class, deck_coefficients
from .census_service import CensusResult, CensusService, prop1_counts
from .formula_service import (
    InfeasibleN3Error,
    feasible_n3_range,
    formula_rows,
    formula_set,
    identical_formula_groups,
    instantiate,
)
from .identity_service import UnknownSymbolError, check_all, check_numeric, equation_table, parse_side

logger = logging.getLogger(__name__)

FAMILIES = {4: "l", 5: "m", 6: "n"}
ORDERS = {family: m for m, family in FAMILIES.items()}


def measure_n3(census6: CensusResult, anchors) -> int:
    """Count of the prism-minus-a-matching-edge class in a complete order-6 census."""
    if census6.order != 6 or not census6.complete:
        raise ValueError("n3 is measured on a complete order-6 census")
    return census6.counts[anchors.n3]


def _symbol_key(symbol: str):
    return "plmn".index(symbol[0]), int(symbol[1:])


@dataclass
class VerificationReport:
    host: dict
    n3: str
    n3_feasible: dict
    census: dict
    multiset: dict
    infeasible_zero: dict
    prop1: dict
    pentagon_profile: dict
    anchors: dict
    formula_rows: list
    identical_formulas: list
    refinement: dict
    assignment: list
    tie_groups: list
    equations: list
    equation_findings: list
    discrepancies: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        data = asdict(self)
        data["passed"] = self.passed
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        data = dict(data)
        data.pop("passed", None)
        return cls(**data)


# --- index assignment -------------------------------------------------------

@lru_cache(maxsize=None)
def _printed_edges() -> tuple:
    """(lower symbol, upper symbol, coefficient) from the cross-order relations, repaired lines preferred."""
    edges = []
    for eq in equation_table():
        if eq.group not in ("l", "m"):
            continue
        _, rhs = dict(eq.alternatives).get("repaired", (eq.lhs, eq.rhs))
        for sym, coeff in parse_side(rhs).as_coefficients_dict().items():
            edges.append((eq.name, sym.name, int(coeff)))
    return tuple(edges)


def _deck_edges() -> list:
    edges = []
    for m in (5, 6):
        catalog = build_catalog(m)
        for (L, M), c in sorted(deck_coefficients(m).items()):
            if catalog[M].feasible:
                edges.append(((m - 1, L), (m, M), c))
    return edges


def _neighbourhoods(edges) -> dict:
    nb = defaultdict(list)
    for lo, hi, c in edges:
        nb[lo].append(("up", hi, c))
        nb[hi].append(("down", lo, c))
    return nb


def _renumber(left: dict, right: dict) -> tuple:
    ids = {s: i for i, s in enumerate(sorted(set(left.values()) | set(right.values()), key=repr))}
    return {v: ids[s] for v, s in left.items()}, {v: ids[s] for v, s in right.items()}


def _consistent(left: dict, right: dict) -> bool:
    return Counter(left.values()) == Counter(right.values())


def refine_assignment(symbols: dict, classes: dict, printed_edges=None, deck_edges=None) -> tuple:
    """
    Jointly refine colourings of the printed symbols and the catalog classes.

    Args:
        symbols: symbol -> initial colour
        classes: (order, index) -> initial colour
        printed_edges, deck_edges: (lower, upper, coefficient) rows; the cross-order
            relations and the deck coefficients when omitted

    Returns:
        (symbol colours, class colours, rounds, consistent). The colourings are
        the last pair in which every colour holds as many symbols as classes.
    """
    left, right = _renumber(symbols, classes)
    if not _consistent(left, right):
        return left, right, 0, False
    printed_edges = _printed_edges() if printed_edges is None else printed_edges
    deck_edges = _deck_edges() if deck_edges is None else deck_edges
    left_nb, right_nb = _neighbourhoods(printed_edges), _neighbourhoods(deck_edges)
    rounds = 0
    while True:
        sig_l = {v: (left[v], tuple(sorted((d, left[u], c) for d, u, c in left_nb[v]))) for v in left}
        sig_r = {v: (right[v], tuple(sorted((d, right[u], c) for d, u, c in right_nb[v]))) for v in right}
        new_l, new_r = _renumber(sig_l, sig_r)
        if not _consistent(new_l, new_r):
            logger.warning(f"✗ Printed coefficients and deck coefficients disagree after {rounds} rounds")
            return left, right, rounds, False
        if len(set(new_l.values())) == len(set(left.values())):
            return left, right, rounds, True
        left, right = new_l, new_r
        rounds += 1


# --- verification -----------------------------------------------------------

def _expected_multiset(values, zeros: int) -> Counter:
    expected = Counter(Fraction(v) for v in values)
    expected[Fraction(0)] += zeros
    return expected


def _multiset_entry(measured, expected: Counter) -> dict:
    got = Counter(Fraction(v) for v in measured)
    missing = sorted((expected - got).elements())
    unexpected = sorted((got - expected).elements())
    return {
        "match": got == expected,
        "measured_nonzero": [to_decimal(v) for v in sorted(got.elements()) if v],
        "expected_nonzero": [to_decimal(v) for v in sorted(expected.elements()) if v],
        "missing": [to_decimal(v) for v in missing],
        "unexpected": [to_decimal(v) for v in unexpected],
    }


@lru_cache(maxsize=None)
def _symbolic_checks() -> dict:
    return check_all().by_name()


class VerifyService:
    def __init__(self, census_service: CensusService = None):
        self.census_service = census_service or CensusService()

    def verify(self, host: Graph, method: str = "auto") -> VerificationReport:
        params = check_family(host)
        n, k = params.n, params.k
        logger.info(f"Verifying srg{params.as_tuple()}")
        discrepancies = []

        results = self.census_service.census_upto(host, 6, method=method)
        census = {}
        for m in range(3, 7):
            r = results[m]
            census[str(m)] = {"method": r.method, "total": str(r.total), "expected_total": str(math.comb(n, m))}
            if r.total != math.comb(n, m):
                discrepancies.append({"kind": "census-total", "order": m, "total": str(r.total)})

        catalog6 = build_catalog(6)
        anchors = anchor_classes(catalog6)
        n3 = measure_n3(results[6], anchors)
        logger.info(f"Measured n3 = {n3}")

        fs = formula_set(n, k)
        try:
            n_values = [Fraction(v) for v in instantiate(fs, n3)]
        except InfeasibleN3Error as e:
            logger.warning(f"✗ {e}")
            discrepancies.append({"kind": "infeasible-n3", "detail": str(e)})
            n_values = [c.at(n3) for c in fs.counts]

        # multiset matches, numbering independent
        formula_values = {3: list(fs.order3), 4: list(fs.l), 5: list(fs.m), 6: n_values}
        multiset, infeasible_zero = {}, {}
        for m in range(3, 7):
            catalog = build_catalog(m)
            zeros = len(catalog.infeasible_indices())
            entry = _multiset_entry(results[m].counts, _expected_multiset(formula_values[m], zeros))
            multiset[str(m)] = entry
            if not entry["match"]:
                discrepancies.append({"kind": "multiset", "order": m,
                                      "missing": entry["missing"], "unexpected": entry["unexpected"]})
            nonzero = [i for i in catalog.infeasible_indices() if results[m].counts[i]]
            infeasible_zero[str(m)] = not nonzero
            if nonzero:
                discrepancies.append({"kind": "infeasible-class", "order": m, "classes": nonzero})

        measured_p = prop1_counts(results)
        prop1 = {"measured": [str(v) for v in measured_p], "formula": [str(v) for v in fs.p],
                 "match": tuple(measured_p) == tuple(fs.p)}
        if not prop1["match"]:
            discrepancies.append({"kind": "prop1", **prop1})

        profile = self.census_service.pentagon_profile(host)
        expected_profile = {2 * (k - 4): n * k * (k - 2) // 2}
        pentagons = {
            "histogram": {str(key): str(value) for key, value in profile.items()},
            "expected": {str(key): str(value) for key, value in expected_profile.items()},
            "incidences": str(sum(key * value for key, value in profile.items())),
            "match": profile == expected_profile,
        }
        if not pentagons["match"]:
            discrepancies.append({"kind": "pentagon-profile", "histogram": pentagons["histogram"]})

        anchor_report = {}
        for name, index in anchors.as_dict().items():
            measured = results[6].counts[index]
            expected = n_values[int(name[1:]) - 1]
            anchor_report[name] = {"class": index, "measured": str(measured), "formula": to_decimal(expected)}
            if measured != expected:
                discrepancies.append({"kind": "anchor", "symbol": name, **anchor_report[name]})

        symbol_values = {f"{FAMILIES[m]}{i}": v for m in (4, 5, 6)
                         for i, v in enumerate(formula_values[m], start=1)}
        assignment, tie_groups, refinement, measured_values = self._assign(results, anchors, symbol_values)
        if not refinement["consistent"]:
            discrepancies.append({"kind": "refinement", **refinement})

        values = {"p3": measured_p[0], "p4": measured_p[1], "p5": measured_p[2], **measured_values, "n3": n3}
        equations, findings = self._evaluate_equations(values, n, k, discrepancies)

        report = VerificationReport(
            host={"n": str(n), "k": str(k), "lambda": str(params.lam), "mu": str(params.mu)},
            n3=str(n3),
            n3_feasible=feasible_n3_range(n, k).as_dict(),
            census=census,
            multiset=multiset,
            infeasible_zero=infeasible_zero,
            prop1=prop1,
            pentagon_profile=pentagons,
            anchors=anchor_report,
            formula_rows=self._formula_rows(fs, n3),
            identical_formulas=[[f"n{i}" for i in group] for group in identical_formula_groups()],
            refinement=refinement,
            assignment=assignment,
            tie_groups=tie_groups,
            equations=equations,
            equation_findings=findings,
            discrepancies=discrepancies,
        )
        if report.passed:
            logger.info("✓ All checks pass")
        else:
            logger.warning(f"✗ {len(discrepancies)} discrepancies")
        return report

    @staticmethod
    def _formula_rows(fs, n3) -> list:
        rows = [{"symbol": f"n{r['index']}", "a": r["a"], "b": r["b"], "value": r["value"]}
                for r in formula_rows(fs, n3)]
        for family, values in (("m", fs.m), ("l", fs.l)):
            rows += [{"symbol": f"{family}{i}", "a": str(v), "b": "0", "value": str(v)}
                     for i, v in enumerate(values, start=1)]
        return rows

    @staticmethod
    def _assign(results: dict, anchors, symbol_values: dict) -> tuple:
        labels = {name: name for name in anchors.as_dict()}
        labels.update({"l8": "C4", "m18": "C5"})
        class_labels = {(6, index): name for name, index in anchors.as_dict().items()}
        class_labels[(4, cycle_class(4))] = "C4"
        class_labels[(5, cycle_class(5))] = "C5"

        symbols = {s: (ORDERS[s[0]], to_decimal(v), labels.get(s, ""))
                   for s, v in symbol_values.items()}
        classes = {}
        for m in (4, 5, 6):
            for i in build_catalog(m).feasible_indices():
                classes[(m, i)] = (m, str(results[m].counts[i]), class_labels.get((m, i), ""))

        left, right, rounds, consistent = refine_assignment(symbols, classes)
        if _consistent(left, right):
            members = defaultdict(list)
            for s, colour in left.items():
                members[colour].append(s)
            candidates = {c: sorted(members[right[c]], key=_symbol_key) for c in classes}
        else:
            logger.warning("✗ Measured values and formula values disagree; assignment falls back to equal values")
            candidates = {c: sorted((s for s, colour in symbols.items() if colour[:2] == classes[c][:2]),
                                    key=_symbol_key)
                          for c in classes}

        assignment, ties, measured = [], [], {}
        for (m, i), cands in sorted(candidates.items()):
            count = results[m].counts[i]
            assignment.append({
                "order": m,
                "class": i,
                "code": build_catalog(m)[i].code.hex,
                "count": str(count),
                "candidates": cands,
                "assigned": cands[0] if len(cands) == 1 else None,
            })
            for s in cands:
                measured[s] = count
            if len(cands) > 1 and cands not in ties:
                ties.append(cands)
        ties.sort(key=lambda group: [_symbol_key(s) for s in group])
        refinement = {"rounds": rounds, "consistent": consistent,
                      "assigned": sum(1 for a in assignment if a["assigned"])}
        return assignment, ties, refinement, measured

    @staticmethod
    def _evaluate_equations(values: dict, n: int, k: int, discrepancies: list) -> tuple:
        symbolic = _symbolic_checks()
        entries, findings = [], []
        for eq in equation_table():
            check = symbolic[eq.name]
            entry = {"name": eq.name, "group": eq.group, "status": check.status, "readings": []}
            try:
                numeric = check_numeric(eq, values, n, k)
            except UnknownSymbolError as e:
                entry["unevaluated"] = str(e)
                entries.append(entry)
                continue
            for sym_verdict, num in zip(check.readings, numeric):
                entry["readings"].append({
                    "reading": num.reading,
                    "holds_symbolic": sym_verdict.holds,
                    "holds_numeric": num.holds,
                    "lhs": to_decimal(num.lhs),
                    "rhs": to_decimal(num.rhs),
                })
                if sym_verdict.holds and not num.holds:
                    discrepancies.append({"kind": "equation", "name": eq.name, "reading": num.reading,
                                          "lhs": to_decimal(num.lhs), "rhs": to_decimal(num.rhs)})
            if check.status == "fails":
                findings.append({"name": eq.name, "residual": check.readings[0].residual,
                                 "suggestions": list(check.suggestions), "note": check.note})
            entries.append(entry)
        return entries, findings


def verify(host: Graph, workers: int = None, long: bool = False, transitive: bool = False,
           method: str = "auto") -> VerificationReport:
    service = CensusService(workers=workers, long=long, transitive=transitive)
    return VerifyService(service).verify(host, method=method)


def emit_report(report: VerificationReport, path: str = None, fmt: str = "json") -> str:
    """JSON report, or the formula rows as CSV. Written to path when given; the text is returned."""
    if fmt == "json":
        text = dump_json(report.to_dict())
    elif fmt == "csv":
        text = render_table(report.formula_rows, "csv", columns=["symbol", "a", "b", "value"])
    else:
        raise ValueError(f"Unknown report format: {fmt}")
    if path:
        write_text(text, path)
    return text


def exit_code(report: VerificationReport) -> int:
    return 0 if report.passed else 2

