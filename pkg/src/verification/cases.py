# src/verification/cases.py
"""
Verification cases: one theorem, one parameter set, an alpha grid, a
tolerance and a comparison mode, checked against the Jacobi oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src import config
from src.errors import (
    AlphaBoundary,
    EdgeListParseError,
    InvalidVertex,
    LAlphaError,
    NotConnected,
    NotEquitable,
    NotRegular,
    ParameterOutOfRange,
    SizeMismatch,
    UnknownTheorem,
)
from src.graphs.graph import Graph
from src.graphs.operations import cartesian, direct, strong
from src.graphs.structure import structural_report
from src.linalg.eigen import Spectrum, eigen_sym
from src.linalg.matrices import (
    DenseMatrix,
    SymMatrix,
    adjacency_matrix,
    check_alpha,
    degree_matrix,
    identity,
    kronecker,
    l_alpha_matrix,
)
from src.linalg.poly import RealPoly, char_poly, coefficient_deviation, evaluate, scaled_residual
from src.theorems.dispatch import THEOREM_IDS, evaluate_theorem, oracle_graph, resolve_graph

# Non-bipartite graphs must miss spectral equality by at least this much.
NEGATIVE_MARGIN = 1e-3

# Bad inputs while building the oracle graph.
CONSTRUCTION_ERRORS = (ParameterOutOfRange, InvalidVertex, EdgeListParseError)

# Theorem preconditions the inputs do not meet.
HYPOTHESIS_ERRORS = (NotRegular, NotConnected, NotEquitable, AlphaBoundary, InvalidVertex)


class CheckMode(str, Enum):
    FULL_SPECTRUM = "full-spectrum"
    SUBSET_MEMBERSHIP = "subset-membership"
    POLYNOMIAL_IDENTITY = "polynomial-identity"
    MULTIPLICITY_LOWER_BOUND = "multiplicity-lower-bound"
    MATRIX_IDENTITY = "matrix-identity"
    MINIMUM_BOUND = "minimum-bound"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    EXPECTED_NEGATIVE = "expected-negative"


DEFAULT_MODES: Dict[str, CheckMode] = {
    "twins": CheckMode.MULTIPLICITY_LOWER_BOUND,
    "quotient": CheckMode.MULTIPLICITY_LOWER_BOUND,
    "join-lifted": CheckMode.SUBSET_MEMBERSHIP,
    "direct-subset": CheckMode.SUBSET_MEMBERSHIP,
    "strong-subset": CheckMode.SUBSET_MEMBERSHIP,
    "coalescence": CheckMode.POLYNOMIAL_IDENTITY,
    "splitting": CheckMode.POLYNOMIAL_IDENTITY,
    "kronecker": CheckMode.MATRIX_IDENTITY,
    "nonnegativity": CheckMode.MINIMUM_BOUND,
}


def alpha_grid(steps: int = config.ALPHA_STEPS, start: float = 0.0, end: float = 1.0) -> List[float]:
    """Evenly spaced alphas, rounded so 0.1-steps print cleanly."""
    if steps < 2:
        raise ParameterOutOfRange(f"alpha grid needs at least 2 steps, got {steps}")
    check_alpha(start)
    check_alpha(end)
    return [round(float(a), 12) for a in np.linspace(start, end, steps)]


# ---------- types ----------


@dataclass
class VerificationCase:
    theorem: str
    params: Dict[str, Any] = field(default_factory=dict)
    alphas: List[float] = field(default_factory=alpha_grid)
    tolerance: float = config.TOLERANCE
    mode: Optional[CheckMode] = None

    def __post_init__(self) -> None:
        if self.theorem not in THEOREM_IDS:
            raise UnknownTheorem(f"unknown theorem id {self.theorem!r}")
        if self.tolerance <= 0:
            raise ParameterOutOfRange(f"tolerance must be positive, got {self.tolerance}")
        self.alphas = [check_alpha(a) for a in self.alphas]
        if self.mode is None:
            self.mode = DEFAULT_MODES.get(self.theorem, CheckMode.FULL_SPECTRUM)

    @property
    def label(self) -> str:
        args = ",".join(f"{k}={_param_text(v)}" for k, v in self.params.items())
        return f"{self.theorem}[{args}]"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "params": {k: _param_text(v) for k, v in self.params.items()},
            "alphas": list(self.alphas),
            "tolerance": self.tolerance,
            "mode": self.mode.value,
        }


def _param_text(value: Any) -> str:
    if isinstance(value, Graph):
        return repr(value)
    return str(value)


@dataclass
class AlphaOutcome:
    alpha: float
    status: Status
    deviation: float = 0.0
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha,
            "status": self.status.value,
            "deviation": self.deviation,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    case: VerificationCase
    outcomes: List[AlphaOutcome] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def status(self) -> Status:
        statuses = {o.status for o in self.outcomes}
        if Status.FAIL in statuses:
            return Status.FAIL
        if not statuses or statuses == {Status.SKIPPED}:
            return Status.SKIPPED
        if Status.EXPECTED_NEGATIVE in statuses:
            return Status.EXPECTED_NEGATIVE
        return Status.PASS

    @property
    def max_deviation(self) -> float:
        checked = [o.deviation for o in self.outcomes if o.status is not Status.SKIPPED]
        return max(checked, default=0.0)

    @property
    def unexpected_failure(self) -> bool:
        return self.status is Status.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case.to_dict(),
            "label": self.case.label,
            "status": self.status.value,
            "max_deviation": self.max_deviation,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "notes": list(self.notes),
        }


# ---------- comparisons ----------


def compare_spectra(a: Spectrum, b: Spectrum, tol: float = config.TOLERANCE) -> Tuple[bool, float]:
    """
    Elementwise comparison of the sorted expansions.

    Returns (passed, max relative deviation) where the deviation of each pair
    is |a_i - b_i| / max(1, |a_i|).
    """
    if a.order != b.order:
        raise SizeMismatch(f"spectra have {a.order} and {b.order} eigenvalues")
    va, vb = a.values(), b.values()
    if va.size == 0:
        return True, 0.0
    deviation = float(np.max(np.abs(va - vb) / np.maximum(1.0, np.abs(va))))
    return deviation <= tol, deviation


def _nearest(value: float, oracle: np.ndarray) -> float:
    if oracle.size == 0:
        return float("inf")
    return float(np.min(np.abs(oracle - value)) / max(1.0, abs(value)))


def _outcome(alpha: float, passed: bool, deviation: float, detail: str = "") -> AlphaOutcome:
    return AlphaOutcome(alpha, Status.PASS if passed else Status.FAIL, deviation, detail)


def _check_subset(alpha: float, values: Sequence[Tuple[float, int]], oracle: Spectrum, tol: float) -> AlphaOutcome:
    expanded = oracle.values()
    deviation = max((_nearest(v, expanded) for v, _ in values), default=0.0)
    return _outcome(alpha, deviation <= tol, deviation, f"{len(values)} values")


def _check_multiplicity(
    alpha: float,
    values: Sequence[Tuple[float, int]],
    oracle: Spectrum,
    tol: float,
) -> AlphaOutcome:
    expanded = oracle.values()
    deviation = max((_nearest(v, expanded) for v, _ in values), default=0.0)
    short = [
        f"{v:.6g} needs {m}, found {oracle.count_near(v, tol)}"
        for v, m in values
        if oracle.count_near(v, tol) < m
    ]
    return _outcome(alpha, not short and deviation <= tol, deviation, "; ".join(short))


def _evaluation_points(p: RealPoly, q: RealPoly, radius: float) -> np.ndarray:
    count = 2 * max(p.degree, q.degree, 0) + 1
    return np.linspace(-radius, radius, count)


def _check_polynomial(alpha: float, theorem_poly: RealPoly, graph_matrix: SymMatrix, tol: float) -> AlphaOutcome:
    exact = char_poly(graph_matrix)
    if theorem_poly.degree != exact.degree or not theorem_poly.is_monic:
        return _outcome(
            alpha,
            False,
            float("inf"),
            f"degree {theorem_poly.degree} (leading {theorem_poly.leading:g}), expected monic degree {exact.degree}",
        )

    radius = 1.0 + float(np.max(np.abs(graph_matrix.array).sum(axis=1), initial=0.0))
    point_dev = 0.0
    for x in _evaluation_points(theorem_poly, exact, radius):
        scale = max(1.0, evaluate(RealPoly(tuple(abs(c) for c in exact.coeffs)), abs(x)))
        point_dev = max(point_dev, abs(evaluate(theorem_poly, x) - evaluate(exact, x)) / scale)

    roots = eigen_sym(graph_matrix).values()
    root_dev = max((scaled_residual(theorem_poly, x) for x in roots), default=0.0)
    coeff_dev = coefficient_deviation(theorem_poly, exact)

    deviation = max(point_dev, root_dev, coeff_dev)
    return _outcome(
        alpha,
        deviation <= tol,
        deviation,
        f"points {point_dev:.2e}, roots {root_dev:.2e}, coefficients {coeff_dev:.2e}",
    )


def kronecker_identity_deviation(g: Graph, h: Graph, alpha: float) -> float:
    """
    Largest entry deviation over the product-matrix identities:

        L(G x H)  = L(G) (x) I + I (x) L(H)
        L(G . H)  = a D(G) (x) D(H) + (a - 1) A(G) (x) A(H)
        L(G [x] H) = L(G x H) + L(G . H)
        (A (x) B)(C (x) D) = AC (x) BD
    """
    lg, lh = l_alpha_matrix(g, alpha), l_alpha_matrix(h, alpha)
    ag, ah = adjacency_matrix(g), adjacency_matrix(h)
    dg, dh = degree_matrix(g), degree_matrix(h)
    ig, ih = identity(g.n), identity(h.n)

    l_cart = l_alpha_matrix(cartesian(g, h), alpha).array
    l_dir = l_alpha_matrix(direct(g, h), alpha).array
    l_strong = l_alpha_matrix(strong(g, h), alpha).array

    a_kron = kronecker(ag, ah).array
    d_kron = kronecker(dg, dh).array
    mixed = kronecker(
        DenseMatrix.from_array(ag.array @ dg.array), DenseMatrix.from_array(ah.array @ dh.array)
    ).array

    residuals = [
        l_cart - (kronecker(lg, ih).array + kronecker(ig, lh).array),
        l_dir - (alpha * d_kron + (alpha - 1) * a_kron),
        l_strong - (l_cart + l_dir),
        a_kron @ d_kron - mixed,
    ]
    return max(float(np.max(np.abs(r), initial=0.0)) for r in residuals)


# ---------- running ----------


def _check_bipartite(alpha: float, case: VerificationCase, graph: Graph) -> AlphaOutcome:
    theorem = evaluate_theorem(case.theorem, case.params, alpha)
    oracle = eigen_sym(l_alpha_matrix(graph, alpha))
    passed, deviation = compare_spectra(theorem.spectrum, oracle, case.tolerance)

    if structural_report(graph).is_bipartite:
        return _outcome(alpha, passed, deviation)
    if alpha == 1.0:
        return AlphaOutcome(alpha, Status.SKIPPED, 0.0, "L_1 = A_1 = D for every graph")
    if deviation > NEGATIVE_MARGIN:
        return AlphaOutcome(
            alpha, Status.EXPECTED_NEGATIVE, deviation, "not bipartite; spectra differ as expected"
        )
    return _outcome(alpha, False, deviation, "not bipartite but spectra agree")


def _check_nonnegative(alpha: float, case: VerificationCase, graph: Graph) -> AlphaOutcome:
    if alpha < 0.5:
        return AlphaOutcome(alpha, Status.SKIPPED, 0.0, "nonnegativity is claimed for alpha >= 1/2")
    if not structural_report(graph).is_connected:
        raise NotConnected(f"{graph!r} is not connected")
    spectrum = eigen_sym(l_alpha_matrix(graph, alpha))
    lowest = spectrum.min_value if spectrum.entries else 0.0
    deviation = max(0.0, -lowest)
    return _outcome(alpha, deviation <= case.tolerance, deviation, f"min eigenvalue {lowest:.3e}")


def _check_at(case: VerificationCase, graph: Graph, alpha: float, notes: List[str]) -> AlphaOutcome:
    if case.theorem == "bipartite-equiv":
        return _check_bipartite(alpha, case, graph)
    if case.mode is CheckMode.MINIMUM_BOUND:
        return _check_nonnegative(alpha, case, graph)
    if case.mode is CheckMode.MATRIX_IDENTITY:
        deviation = kronecker_identity_deviation(
            resolve_graph(case.params["g"]), resolve_graph(case.params["h"]), alpha
        )
        return _outcome(alpha, deviation <= case.tolerance, deviation)

    theorem = evaluate_theorem(case.theorem, case.params, alpha)
    for note in theorem.notes:
        if note not in notes:
            notes.append(note)

    matrix = l_alpha_matrix(graph, alpha)
    if case.mode is CheckMode.POLYNOMIAL_IDENTITY:
        if theorem.polynomial is None:
            raise ParameterOutOfRange(f"{case.theorem} does not produce a polynomial")
        return _check_polynomial(alpha, theorem.polynomial, matrix, case.tolerance)

    oracle = eigen_sym(matrix)
    if case.mode is CheckMode.FULL_SPECTRUM:
        if theorem.spectrum is None:
            raise ParameterOutOfRange(f"{case.theorem} does not produce a full spectrum")
        passed, deviation = compare_spectra(theorem.spectrum, oracle, case.tolerance)
        return _outcome(alpha, passed, deviation)

    values = theorem.values
    if values is None:
        values = list(theorem.spectrum.entries) if theorem.spectrum is not None else []
    if case.mode is CheckMode.MULTIPLICITY_LOWER_BOUND:
        return _check_multiplicity(alpha, values, oracle, case.tolerance)
    return _check_subset(alpha, values, oracle, case.tolerance)


def _reason(exc: LAlphaError) -> str:
    return f"{type(exc).__name__}: {exc}"


def run_case(case: VerificationCase) -> VerificationReport:
    """
    Build the oracle graph, then evaluate and compare at every grid alpha.

    Errors never escape. Construction errors (CONSTRUCTION_ERRORS while
    building the oracle graph) and theorem hypothesis violations
    (HYPOTHESIS_ERRORS) become skipped outcomes; any other toolkit error
    means a closed form or the kernel misbehaved and is recorded as a
    failure. Both carry the error message.
    """
    report = VerificationReport(case)

    try:
        graph = oracle_graph(case.theorem, case.params)
    except LAlphaError as exc:
        status = Status.SKIPPED if isinstance(exc, CONSTRUCTION_ERRORS) else Status.FAIL
        deviation = 0.0 if status is Status.SKIPPED else float("inf")
        report.outcomes = [AlphaOutcome(a, status, deviation, _reason(exc)) for a in case.alphas]
        return report

    for alpha in case.alphas:
        try:
            report.outcomes.append(_check_at(case, graph, alpha, report.notes))
        except HYPOTHESIS_ERRORS as exc:
            report.outcomes.append(AlphaOutcome(alpha, Status.SKIPPED, 0.0, _reason(exc)))
        except LAlphaError as exc:
            report.outcomes.append(AlphaOutcome(alpha, Status.FAIL, float("inf"), _reason(exc)))
    return report
