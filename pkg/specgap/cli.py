"""
Command-line entry point.

    specgap family --gn 11 --format graph6
    specgap mu --spec "D0,M0,~D1"
    specgap structure --h 3 1 2
    specgap verify table2 | h00 | sandwich | roots | fits | lemma H1
    specgap certify --n 11
    specgap asymptotic --n 100 200 500

Exit codes: 0 when every asserted check passes, 1 when a check fails,
2 on usage or input errors.
"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from specgap.blocks.assembly import Assembly
from specgap.blocks.families import build_family
from specgap.certify import (
    find_minimal,
    verify_asymptotic,
    verify_h00,
    verify_sandwich,
    verify_table2,
)
from specgap.config import CELL_SPREAD_TOL, ENUMERATION_MAX_ORDER, TIE_TOL
from specgap.domain.formats import from_graph6, to_graph6, to_json
from specgap.domain.graph import Graph
from specgap.exceptions import SpecGapError
from specgap.polyroots import verify_root_claims
from specgap.replace import run_lemma, end_pair_witnesses
from specgap.spectra.eigen import algebraic_connectivity
from specgap.structure import (
    exceptional_cells,
    fiedler_structure,
    is_palindromic,
    mirror_map,
    structural_partition,
    structure_status,
)
from specgap.utils import model_rows, to_csv_text, to_json_text, write_report

OutputFormat = Literal["json", "csv", "graph6"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class RunConfig(BaseModel):
    """Validated settings of one CLI invocation."""

    model_config = ConfigDict(frozen=True)

    command: str
    orders: List[int] = []
    m_values: List[int] = []
    cell_spread_tol: float = CELL_SPREAD_TOL
    tie_tol: float = TIE_TOL
    output_format: OutputFormat = "json"
    output: Optional[str] = None
    threads: Optional[int] = None

    @field_validator("cell_spread_tol", "tie_tol")
    @classmethod
    def tolerance_positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("Tolerances must be positive")
        return v

    @field_validator("orders", "m_values")
    @classmethod
    def range_values(cls, v: List[int]) -> List[int]:
        if any(x < 0 for x in v):
            raise ValueError("Ranges must hold non-negative integers")
        return v

    @field_validator("threads")
    @classmethod
    def threads_positive(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError("Thread count must be at least 1")
        return v


class UsageError(Exception):
    pass


def _span(lo: int, hi: int) -> List[int]:
    if hi < lo:
        raise UsageError(f"Empty range {lo}..{hi}")
    return list(range(lo, hi + 1))


def _add_graph_source(p: argparse.ArgumentParser, allow_graph6: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--gn", type=int, metavar="N", help="The graph G_N")
    group.add_argument("--h", type=int, nargs=3, metavar=("M", "I", "J"), help="H_{I,J}(M)")
    group.add_argument("--spec", help='Block sequence such as "D0,M0,~D1"')
    if allow_graph6:
        group.add_argument("--graph6", help="A graph in graph6 format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specgap",
        description="Verification lab for quartic graphs of minimum algebraic connectivity",
    )
    parser.add_argument("--output", "-o", help="Report path; '-' (default) is stdout")
    parser.add_argument("--threads", type=int, help="Worker count (default SPECGAP_THREADS)")
    parser.add_argument("--cell-spread-tol", type=float, default=CELL_SPREAD_TOL)
    parser.add_argument("--tie-tol", type=float, default=TIE_TOL)
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    family = sub.add_parser("family", help="Build a named graph")
    _add_graph_source(family)
    family.add_argument("--format", choices=["graph6", "json"], default="graph6")

    mu = sub.add_parser("mu", help="Algebraic connectivity and Fiedler vector")
    _add_graph_source(mu, allow_graph6=True)

    structure = sub.add_parser("structure", help="Fiedler vector structure of an assembly")
    _add_graph_source(structure)

    verify = sub.add_parser("verify", help="Run a verification")
    checks = verify.add_subparsers(dest="check", required=True)
    table2 = checks.add_parser("table2", help="mu(G_n) against the quoted bounds")
    table2.add_argument("--from", dest="lo", type=int, default=11)
    table2.add_argument("--to", dest="hi", type=int, default=40)
    table2.add_argument("--format", choices=["csv", "json"], default="csv")
    h00 = checks.add_parser("h00", help="H_{0,0}(m) test vector bound")
    h00.add_argument("--m-max", type=int, default=50)
    h00.add_argument("--format", choices=["csv", "json"], default="csv")
    sandwich = checks.add_parser("sandwich", help="H_{i,j}(m) ordering")
    sandwich.add_argument("--m-max", type=int, default=12)
    sandwich.add_argument("--format", choices=["csv", "json"], default="csv")
    lemma = checks.add_parser("lemma", help="Replacement experiment of a lemma")
    lemma.add_argument("name", help="E1..E3 or H1..H6")
    lemma.add_argument("--host", action="append", help="Host family spec (repeatable)")
    checks.add_parser("roots", help="Quoted polynomial roots and sign statements")
    checks.add_parser("fits", help="Fit witnesses for the end-block pairs")

    certify = sub.add_parser("certify", help="Exhaustive census at order N")
    certify.add_argument("--n", type=int, required=True)

    asym = sub.add_parser("asymptotic", help="n^2 mu(G_n) / (4 pi^2)")
    asym.add_argument("--n", type=int, nargs="+", default=[100, 200, 500])
    asym.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


def _source(args: argparse.Namespace) -> Tuple[Optional[Assembly], Graph]:
    if getattr(args, "graph6", None):
        return None, from_graph6(args.graph6)
    if args.gn is not None:
        a = build_family(f"gn:{args.gn}")
    elif args.h is not None:
        m, i, j = args.h
        a = build_family(f"h:{m},{i},{j}")
    else:
        a = build_family(args.spec)
    return a, a.graph


def _with_passed(report: BaseModel, flag: bool) -> Dict[str, Any]:
    data = report.model_dump(mode="json")
    data["all_passed"] = flag
    return data


Outcome = Tuple[str, bool]


def _run_family(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    a, g = _source(args)
    if cfg.output_format == "graph6":
        return to_graph6(g) + "\n", True
    data = to_json(g)
    if a is not None:
        data["blocks"] = a.tags
    return to_json_text(data), True


def _run_mu(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    a, g = _source(args)
    report = algebraic_connectivity(g, a.cell_order if a else None)
    return to_json_text(report), True


def _run_structure(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    a, g = _source(args)
    assert a is not None
    spectrum = algebraic_connectivity(g, a.cell_order)
    mirror = mirror_map(a) if is_palindromic(a) else None
    report = fiedler_structure(
        g,
        spectrum.vector,
        structural_partition(a),
        tol=cfg.cell_spread_tol,
        mirror=mirror,
        exceptional=exceptional_cells(a),
    )
    status = structure_status(report, spectrum.gap23)
    data = report.model_dump(mode="json")
    data.update(blocks=a.tags, mu=spectrum.mu, gap23=spectrum.gap23, status=status)
    return to_json_text(data), status != "fail"


def _tabular(
    report: BaseModel, rows: Sequence[BaseModel], columns: Sequence[str], cfg: RunConfig, ok: bool
) -> Outcome:
    if cfg.output_format == "csv":
        return to_csv_text(model_rows(rows, extra=("passed",)), list(columns) + ["passed"]), ok
    return to_json_text(_with_passed(report, ok)), ok


def _run_verify(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    if args.check == "table2":
        t2 = verify_table2(cfg.orders, cfg.threads)
        return _tabular(
            t2, t2.rows, ("n", "mu", "rounded_up", "quoted", "decreasing"), cfg, t2.all_passed
        )
    if args.check == "h00":
        h = verify_h00(cfg.m_values, cfg.threads)
        columns = ("m", "n", "rayleigh", "closed_form", "mu", "vector_sum")
        return _tabular(h, h.rows, columns, cfg, h.all_passed)
    if args.check == "sandwich":
        s = verify_sandwich(cfg.m_values, cfg.threads)
        return _tabular(s, s.rows, ("m", "path_bound", "mu_44", "mu_00"), cfg, s.all_passed)
    if args.check == "lemma":
        suite = run_lemma(args.name, args.host)
        return to_json_text(_with_passed(suite, suite.all_passed)), suite.all_passed
    if args.check == "roots":
        roots = verify_root_claims()
        return to_json_text(_with_passed(roots, roots.all_passed)), roots.all_passed
    witnesses = end_pair_witnesses()
    data = [
        {
            "d": d,
            "d_prime": dp,
            "fits": w is not None,
            "pi": [list(c) for c in w.pi.cells] if w else None,
            "pi_prime": [list(c) for c in w.pi_prime.cells] if w else None,
        }
        for d, dp, w in witnesses
    ]
    ok = all(row["fits"] for row in data)
    return to_json_text({"pairs": data, "all_passed": ok}), ok


def _run_certify(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    report = find_minimal(args.n, cfg.threads, tie_tol=cfg.tie_tol)
    return to_json_text(_with_passed(report, report.passed)), report.passed


def _run_asymptotic(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    report = verify_asymptotic(cfg.orders, cfg.threads)
    columns = ("n", "mu", "ratio", "relaxation_time", "walk_bound_ratio")
    if cfg.output_format == "csv":
        rows = model_rows(report.rows, extra=("walk_bound_slack",))
        return to_csv_text(rows, list(columns) + ["walk_bound_slack"]), report.all_passed
    return to_json_text(_with_passed(report, report.all_passed)), report.all_passed


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], Outcome]] = {
    "family": _run_family,
    "mu": _run_mu,
    "structure": _run_structure,
    "verify": _run_verify,
    "certify": _run_certify,
    "asymptotic": _run_asymptotic,
}


def make_config(args: argparse.Namespace) -> RunConfig:
    orders: List[int] = []
    m_values: List[int] = []
    if args.command == "verify" and args.check == "table2":
        orders = _span(args.lo, args.hi)
    elif args.command == "verify" and args.check in ("h00", "sandwich"):
        m_values = _span(1, args.m_max)
    elif args.command == "asymptotic":
        orders = sorted(set(args.n))
    elif args.command == "certify" and args.n > ENUMERATION_MAX_ORDER:
        raise UsageError(f"certify supports n <= {ENUMERATION_MAX_ORDER}")
    return RunConfig(
        command=args.command if args.command != "verify" else f"verify {args.check}",
        orders=orders,
        m_values=m_values,
        cell_spread_tol=args.cell_spread_tol,
        tie_tol=args.tie_tol,
        output_format=getattr(args, "format", "json"),
        output=args.output,
        threads=args.threads,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if not args.verbose:
        logger.remove()
        logger.add(sys.stderr, level="WARNING")

    try:
        cfg = make_config(args)
        text, ok = COMMANDS[args.command](args, cfg)
    except (UsageError, ValidationError) as e:
        print(f"specgap: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SpecGapError as e:
        print(f"specgap: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE

    write_report(text, cfg.output or "-", name=cfg.command.replace(" ", "_"))
    if not ok:
        logger.warning(f"{cfg.command}: checks failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
