# src/cli/commands.py
"""
Command-line surface: construct, spectrum, sweep, charpoly, verify.

Exit codes:
    0  success
    1  verify found an unexpected failure
    2  parse or parameter error
    3  alpha outside its domain
    4  input too large for the requested computation
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import pathlib
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

import pandas as pd

from src import config
from src.analytics.sweeps import alpha_sweep, write_sweep_csv
from src.errors import AlphaBoundary, AlphaOutOfRange, LAlphaError, ParameterOutOfRange, SizeMismatch
from src.graphs import operations as ops
from src.graphs.edgelist import format_edge_list, read_edge_list, write_edge_list
from src.graphs.families import (
    make_core_satellite,
    make_h_graph,
    make_kk_graph,
    make_named,
    make_pineapple,
    make_splitting,
)
from src.graphs.graph import Graph
from src.graphs.structure import structural_report
from src.graphs.tokens import parse_graph_token
from src.linalg.eigen import eigen_sym, round_significant
from src.linalg.matrices import check_alpha, l_alpha_matrix
from src.linalg.poly import char_poly
from src.theorems.dispatch import THEOREM_IDS
from src.verification.cases import VerificationCase, alpha_grid
from src.verification.corpus import default_corpus
from src.verification.report import render_table, reports_to_json
from src.workflows.verify_workflow import run_suite

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_SIZE = 4

FAMILIES = [
    "complete",
    "path",
    "cycle",
    "empty",
    "star",
    "complete_bipartite",
    "pineapple",
    "h",
    "kk",
    "core_satellite",
]
BINARY_OPS: Dict[str, Callable[[Graph, Graph], Graph]] = {
    "union": ops.union,
    "join": ops.join,
    "cartesian": ops.cartesian,
    "direct": ops.direct,
    "strong": ops.strong,
}
OPS = list(BINARY_OPS) + ["splitting", "coalesce"]

# Params the verify command forwards to the case, in label order.
_CASE_KEYS = ["g", "u", "h", "v", "n", "p", "q", "l", "c", "s", "eta"]


# ---------- helpers ----------


def load_graph(value: str) -> Graph:
    """An edge-list file when the path exists, otherwise a graph token (k5, c4, pine5,3, ...)."""
    path = pathlib.Path(value)
    if path.exists():
        return read_edge_list(path)
    return parse_graph_token(value)


def _need(args: argparse.Namespace, *names: str) -> List[Any]:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise ParameterOutOfRange(f"missing {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def _clean_coefficients(coeffs: Sequence[float], digits: int = config.SIGNIFICANT_DIGITS) -> List[float]:
    scale = max((abs(c) for c in coeffs), default=1.0)
    cutoff = scale * 10.0 ** -digits
    return [0.0 if abs(c) < cutoff else round_significant(c, digits) for c in coeffs]


def exit_code_for(exc: LAlphaError) -> int:
    if isinstance(exc, (AlphaOutOfRange, AlphaBoundary)):
        return EXIT_DOMAIN
    if isinstance(exc, SizeMismatch):
        return EXIT_SIZE
    return EXIT_PARSE


# ---------- construct ----------


def _build_family(args: argparse.Namespace) -> Graph:
    family = args.family
    if family == "complete_bipartite":
        return make_named(family, *_need(args, "p", "q"))
    if family == "pineapple":
        return make_pineapple(*_need(args, "p", "q"))
    if family == "h":
        return make_h_graph(*_need(args, "n", "l"))
    if family == "kk":
        return make_kk_graph(*_need(args, "n", "l"))
    if family == "core_satellite":
        return make_core_satellite(*_need(args, "c", "s", "eta"))
    return make_named(family, *_need(args, "n"))


def _build_op(args: argparse.Namespace) -> Graph:
    (g_path,) = _need(args, "g")
    g = load_graph(g_path)
    if args.op == "splitting":
        return make_splitting(g)

    (h_path,) = _need(args, "h")
    h = load_graph(h_path)
    if args.op == "coalesce":
        u, v = _need(args, "u", "v")
        return ops.coalesce(g, u, h, v)
    return BINARY_OPS[args.op](g, h)


def cmd_construct(args: argparse.Namespace) -> int:
    if (args.family is None) == (args.op is None):
        raise ParameterOutOfRange("construct needs exactly one of --family or --op")

    g = _build_family(args) if args.family is not None else _build_op(args)
    report = structural_report(g)

    if args.out:
        path = write_edge_list(g, args.out)
        print(f"wrote {path}")
    else:
        sys.stdout.write(format_edge_list(g))

    regular = f"yes (k={report.regular_degree})" if report.is_regular else "no"
    print(f"n={report.n} m={report.edge_count} regular={regular} bipartite={'yes' if report.is_bipartite else 'no'}")
    return EXIT_OK


# ---------- spectrum / charpoly ----------


def cmd_spectrum(args: argparse.Namespace) -> int:
    alpha = check_alpha(args.alpha)
    g = load_graph(args.graph)
    records = eigen_sym(l_alpha_matrix(g, alpha)).to_records()

    if args.format == "json":
        print(json.dumps({"alpha": alpha, "spectrum": records}))
    else:
        df = pd.DataFrame(records, columns=["value", "multiplicity"])
        print(f"L_alpha spectrum at alpha={alpha:g} (n={g.n})")
        print(df.to_string(index=False) if not df.empty else "(empty)")
    return EXIT_OK


def cmd_charpoly(args: argparse.Namespace) -> int:
    alpha = check_alpha(args.alpha)
    g = load_graph(args.graph)
    if g.n > config.CHARPOLY_MAX_ORDER:
        raise SizeMismatch(
            f"charpoly supports n <= {config.CHARPOLY_MAX_ORDER}, graph has n={g.n}"
        )
    poly = char_poly(l_alpha_matrix(g, alpha))
    print(json.dumps(_clean_coefficients(poly.coefficients_high_first())))
    return EXIT_OK


# ---------- sweep ----------


def cmd_sweep(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    df = alpha_sweep(g, args.alpha_start, args.alpha_end, args.steps)

    if args.out:
        path = write_sweep_csv(df, args.out)
        print(f"wrote {len(df)} rows to {path}")
    else:
        sys.stdout.write(df.to_csv(index=False, float_format=f"%.{config.SIGNIFICANT_DIGITS}g"))
    return EXIT_OK


# ---------- verify ----------


def _single_case(args: argparse.Namespace) -> VerificationCase:
    params: Dict[str, Any] = {k: getattr(args, k) for k in _CASE_KEYS if getattr(args, k, None) is not None}
    for key in ("g", "h"):
        if key in params and pathlib.Path(params[key]).exists():
            params[key] = read_edge_list(params[key])
    return VerificationCase(
        args.theorem,
        params,
        alphas=alpha_grid(args.alpha_grid),
        tolerance=args.tol if args.tol is not None else config.TOLERANCE,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem is not None:
        corpus: Optional[List[VerificationCase]] = [_single_case(args)]
    elif args.suite == "default":
        corpus = None
    else:
        raise ParameterOutOfRange(f"unknown suite {args.suite!r}; use 'default' or --theorem")

    if corpus is None and args.tol is not None:
        corpus = [dataclasses.replace(c, tolerance=args.tol) for c in default_corpus(args.seed)]

    reports, summary, notes = run_suite(corpus, seed=args.seed)

    if args.verbose:
        stream = sys.stderr if args.json else sys.stdout
        for note in notes:
            print(note, file=stream)

    if args.json:
        print(reports_to_json(reports))
    else:
        print(render_table(reports))
        print(
            f"\n{summary['total']} cases: {summary['pass']} pass, {summary['fail']} fail, "
            f"{summary['skipped']} skipped, {summary['expected-negative']} expected-negative"
        )

    return EXIT_OK if summary["ok"] else EXIT_FAILURES


# ---------- parser ----------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lalpha",
        description="L_alpha(G) = alpha D(G) + (alpha - 1) A(G): spectra, sweeps and theorem checks.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="Build a family or operation graph as an edge list.")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--op", choices=OPS)
    for name in ("n", "p", "q", "l", "c", "s", "eta", "u", "v"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--g", help="Edge-list file (or graph token) for the first operand")
    p.add_argument("--h", help="Edge-list file (or graph token) for the second operand")
    p.add_argument("--out", help="Output edge-list path; stdout when omitted")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", help="L_alpha spectrum of a graph.")
    p.add_argument("--graph", required=True, help="Edge-list file or graph token")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sweep", help="Spectrum across an alpha grid, as CSV.")
    p.add_argument("--graph", required=True, help="Edge-list file or graph token")
    p.add_argument("--alpha-start", type=float, default=0.0)
    p.add_argument("--alpha-end", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=config.ALPHA_STEPS)
    p.add_argument("--out", help="CSV path; stdout when omitted")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("charpoly", help="Characteristic polynomial of L_alpha, highest degree first.")
    p.add_argument("--graph", required=True, help="Edge-list file or graph token")
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="Run theorem checks against the eigensolver.")
    p.add_argument("--suite", default="default")
    p.add_argument("--theorem", choices=THEOREM_IDS)
    for name in ("g", "h"):
        p.add_argument(f"--{name}", help="Graph token or edge-list file")
    for name in ("u", "v", "n", "p", "q", "l", "c", "s", "eta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--alpha-grid", type=int, default=config.ALPHA_STEPS, help="Number of alphas in [0, 1]")
    p.add_argument("--tol", type=float)
    p.add_argument("--seed", type=int, default=config.CORPUS_SEED)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LAlphaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
