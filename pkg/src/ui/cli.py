import argparse
import logging
import os
import sys

from ..config import Config
from ..services.catalog_service import AnchorError, build_catalog
from ..services.census_service import METHODS, CensusBudgetExceeded, CensusService, CompletionError
from ..services.formula_service import (
    FormulaIntegralityError,
    InfeasibleN3Error,
    feasible_n3_range,
    formula_rows,
    formula_set,
    instantiate,
)
from ..services.identity_service import UnknownSymbolError, check_all, spot_check
from ..services.instance_service import (
    GRAPH_BUILDERS,
    ConstructionError,
    HostFormatError,
    HostIOError,
    load_host,
    make_graph,
    save_host,
)
from ..services.verify_service import VerifyService, emit_report, exit_code
from ..utils.family_utils import FamilyError, HostNotInFamilyError, family_params
from ..utils.graph6_utils import Graph6Error
from ..utils.graph_utils import GraphError
from ..utils.report_utils import dump_json, render_table, write_text

logger = logging.getLogger(__name__)

OPERATIONAL_ERRORS = (
    GraphError,
    Graph6Error,
    HostIOError,
    HostFormatError,
    FamilyError,
    HostNotInFamilyError,
    ConstructionError,
    AnchorError,
    FormulaIntegralityError,
    InfeasibleN3Error,
    UnknownSymbolError,
    CensusBudgetExceeded,
    CompletionError,
    OSError,
    ValueError,
)


def _emit(text: str, out: str = None):
    if out:
        write_text(text, out)
    else:
        sys.stdout.write(text)


# --- commands ---------------------------------------------------------------

def cmd_make_graph(args) -> int:
    g = make_graph(args.name)
    out = args.out or os.path.join(Config.OUTPUT_DIR, f"{args.name}.g6")
    save_host(g, out)
    return 0


def cmd_catalog(args) -> int:
    catalog = build_catalog(args.order)
    _emit(render_table(catalog.rows(feasible_only=args.feasible_only), args.format), args.out)
    return 0


def cmd_formulas(args) -> int:
    fp = family_params(args.k)
    fs = formula_set(fp.n, fp.k)
    if args.n3 is not None:
        instantiate(fs, args.n3)
    rows = formula_rows(fs, args.n3)
    if args.format == "csv":
        _emit(render_table(rows, "csv"), args.out)
        return 0
    data = {
        "n": fp.n,
        "k": fp.k,
        "p": [str(v) for v in fs.p],
        "order3": [str(v) for v in fs.order3],
        "l": [str(v) for v in fs.l],
        "m": [str(v) for v in fs.m],
        "n_counts": rows,
        "n3_range": feasible_n3_range(fp.n, fp.k).as_dict(),
    }
    _emit(dump_json(data), args.out)
    return 0


def cmd_identities(args) -> int:
    report = check_all(workers=args.threads)
    data = report.as_dict()
    if args.params is not None:
        fp = family_params(args.params)
        n3_range = feasible_n3_range(fp.n, fp.k)
        data["spot_check"] = {
            "n": fp.n,
            "k": fp.k,
            "n3": n3_range.lower,
            "equations": {
                name: [v.as_dict() for v in verdicts]
                for name, verdicts in spot_check(fp.n, fp.k, n3_range.lower).items()
            },
        }
    _emit(dump_json(data), args.out)
    return 0


def cmd_census(args) -> int:
    host = load_host(args.file)
    service = CensusService(workers=args.threads, long=args.long, transitive=args.transitive)
    result = service.census(host, args.order, method=args.method)
    if args.format == "csv":
        _emit(render_table(result.rows(), "csv"), args.out)
    else:
        _emit(dump_json({
            "order": result.order,
            "method": result.method,
            "total": str(result.total),
            "classes": result.rows(),
        }), args.out)
    return 0


def cmd_verify(args) -> int:
    host = load_host(args.file)
    service = CensusService(workers=args.threads, long=args.long, transitive=args.transitive)
    report = VerifyService(service).verify(host, method=args.method)
    text = emit_report(report, args.out, args.format)
    if not args.out:
        sys.stdout.write(text)
    logger.info(f"n3 = {report.n3}; {len(report.discrepancies)} discrepancies; "
                f"{len(report.equation_findings)} relations fail under every reading")
    return exit_code(report)


def cmd_settings(args) -> int:
    settings = Config.load_user_settings()
    for key in ("threads", "format", "long"):
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    Config.save_user_settings(settings)
    _emit(dump_json(settings), None)
    return 0


# --- parser -----------------------------------------------------------------

def build_parser(settings: dict) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srg-verify",
        description="Subgraph counts of srg(n, k, 1, 2): catalogs, closed forms, identities and censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = settings.get("format", "json")

    p = sub.add_parser("make-graph", help="Write a built-in host graph as graph6")
    p.add_argument("name", choices=sorted(GRAPH_BUILDERS))
    p.add_argument("--out")
    p.set_defaults(func=cmd_make_graph)

    p = sub.add_parser("catalog", help="Isomorphism classes of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--feasible-only", action="store_true")
    p.add_argument("--format", choices=["csv", "json"], default=fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("formulas", help="Closed-form counts for valency k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n3", type=int)
    p.add_argument("--format", choices=["csv", "json"], default=fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("identities", help="Symbolic check of every counting relation")
    p.add_argument("--params", type=int, metavar="K", help="also spot-check numerically at valency K")
    p.add_argument("--threads", type=int, default=settings.get("threads", 1))
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("settings", help="Show or update the saved defaults in user_settings.json")
    p.add_argument("--threads", type=int)
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--long", action=argparse.BooleanOptionalAction)
    p.set_defaults(func=cmd_settings)

    for name, func, help_text in (
        ("census", cmd_census, "Induced-subgraph census of a host graph"),
        ("verify", cmd_verify, "Verify a host srg(n,k,1,2) against the formulas"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        if name == "census":
            p.add_argument("--order", type=int, required=True)
        p.add_argument("--method", choices=list(METHODS), default="auto")
        p.add_argument("--long", action="store_true", default=settings.get("long", False))
        p.add_argument("--transitive", action="store_true",
                       help="host is vertex-transitive; enumerate only through vertex 0")
        p.add_argument("--threads", type=int, default=settings.get("threads", 1))
        p.add_argument("--format", choices=["csv", "json"], default=fmt)
        p.add_argument("--out")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    Config.validate()
    settings = Config.load_user_settings()
    args = build_parser(settings).parse_args(argv)
    try:
        return args.func(args)
    except OPERATIONAL_ERRORS as e:
        logger.error(f"✗ {e}")
        logger.debug("Traceback", exc_info=True)
        return 1

