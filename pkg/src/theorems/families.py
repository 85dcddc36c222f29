# src/theorems/families.py
"""
Spectra of the pineapple, H_n^l, KK_n^l and core-satellite families.

Each family spectrum is a fixed part (twin eigenvalues) plus the eigenvalues
of a small quotient matrix. The quotient matrices below follow the vertex
layout of the constructors in src.graphs.families, so they can be checked
against quotient_matrix() of the constructed graph.

The printed closed forms (pineapple and KK characteristic polynomials, the
H radicals) are kept separately and only compared against the quotient path;
see formula_discrepancy().
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from src.errors import AlphaBoundary, ParameterOutOfRange
from src.linalg.eigen import Spectrum, eigen_sym, eigvals_2x2
from src.linalg.matrices import DenseMatrix, check_alpha
from src.linalg.poly import RealPoly, char_poly, coefficient_deviation, scaled_residual
from src.linalg.quotient import Partition, symmetrized_quotient
from src.theorems.operations import join_quotient


def _open_alpha(alpha: float, family: str) -> float:
    alpha = check_alpha(alpha)
    if alpha == 1.0:
        raise AlphaBoundary(f"the {family} spectrum formula holds for alpha in [0, 1) only")
    return alpha


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterOutOfRange(message)


def _quotient_values(q: DenseMatrix, sizes: Sequence[int]) -> List[Tuple[float, int]]:
    return list(eigen_sym(symmetrized_quotient(q, sizes)).entries)


# ---------- pineapple ----------


def pineapple_partition(p: int, q: int) -> Partition:
    """Clique minus apex, apex, pendants."""
    return Partition.from_blocks(
        [range(p - 1), [p - 1], range(p, p + q)], p + q
    )


def pineapple_quotient(p: int, q: int, alpha: float) -> DenseMatrix:
    a = alpha
    return DenseMatrix.from_array(
        [
            [a * (p - 1) + (a - 1) * (p - 2), a - 1, 0.0],
            [(a - 1) * (p - 1), (p + q - 1) * a, (a - 1) * q],
            [0.0, a - 1, a],
        ]
    )


def spec_pineapple(p: int, q: int, alpha: float) -> Spectrum:
    """{a^(q-1), (a(p-2)+1)^(p-2)} plus the three quotient eigenvalues."""
    _require(p >= 3, f"pineapple needs p >= 3, got {p}")
    _require(q >= 1, f"pineapple needs q >= 1, got {q}")
    alpha = _open_alpha(alpha, "pineapple")

    pairs = [(alpha, q - 1), (alpha * (p - 2) + 1, p - 2)]
    pairs += _quotient_values(pineapple_quotient(p, q, alpha), pineapple_partition(p, q).sizes)
    return Spectrum.from_pairs(pairs)


def printed_pineapple_poly(p: int, q: int, alpha: float) -> RealPoly:
    """The cubic as printed with the pineapple theorem."""
    a = alpha
    c2 = -3 * a * p - a * q + 4 * a + p - 2
    c1 = (
        2 * a**3 * p**2 - 6 * a**2 * p + 4 * a**2 - a * p**2 + 2 * a**2 * p * q
        - 4 * a**2 * q + 5 * a * p - 4 * a - a * p * q + 4 * a * q - p - q + 1
    )
    c0 = (
        2 * a**3 * p * q - 3 * a**3 * q - 5 * a**2 * p * q + 8 * a**2 * q
        + 4 * a * p * q - 7 * a * q - p * q + 2 * q
    )
    return RealPoly.from_coeffs([c0, c1, c2, 1.0])


# ---------- H_n^l ----------


def h_graph_partition(n: int, l: int) -> Partition:
    """Unmatched copy one, matched copy one, matched copy two, unmatched copy two."""
    return Partition.from_blocks(
        [range(l, n), range(l), range(n, n + l), range(n + l, 2 * n)], 2 * n
    )


def h_graph_quotient(n: int, l: int, alpha: float) -> DenseMatrix:
    a = alpha
    b11 = a * n + (a - 1) * (l - 1)
    b22 = a * (n - 1) + (a - 1) * (n - l - 1)
    return DenseMatrix.from_array(
        [
            [b22, l * (a - 1), 0.0, 0.0],
            [(a - 1) * (n - l), b11, a - 1, 0.0],
            [0.0, a - 1, b11, (a - 1) * (n - l)],
            [0.0, 0.0, l * (a - 1), b22],
        ]
    )


def _check_h(n: int, l: int) -> None:
    _require(n >= 3, f"H graph needs n >= 3, got {n}")
    _require(1 <= l < n, f"H graph spectrum needs 1 <= l < n, got l={l}, n={n}")


def spec_h_graph(n: int, l: int, alpha: float) -> Spectrum:
    """
    {(na)^(l-1), (a(n-2)+1)^(2n-2l-2), (a(n-2)+2)^(l-1)} plus the four
    quotient eigenvalues.
    """
    _check_h(n, l)
    alpha = _open_alpha(alpha, "H graph")

    pairs = [
        (n * alpha, l - 1),
        (alpha * (n - 2) + 1, 2 * n - 2 * l - 2),
        (alpha * (n - 2) + 2, l - 1),
    ]
    pairs += _quotient_values(h_graph_quotient(n, l, alpha), h_graph_partition(n, l).sizes)
    return Spectrum.from_pairs(pairs)


def h_graph_radicals(n: int, l: int, alpha: float) -> List[float]:
    """theta_1..theta_4 as printed, ascending within each pair."""
    _check_h(n, l)
    a = alpha
    r1 = (
        8 * a**2 * l + a**2 * n**2 - 4 * a**2 * n + 4 * a**2 - 12 * a * l
        - 2 * a * n**2 + 6 * a * n - 4 * a + 4 * l + n**2 - 2 * n + 1
    )
    r2 = a**2 * n**2 + 4 * a * l - 2 * a * n**2 - 2 * a * n - 4 * l + n**2 + 2 * n + 1
    base1 = 3 * a * n / 2 - a - n / 2 + 0.5
    base2 = 3 * a * n / 2 - 2 * a - n / 2 + 1.5
    s1 = math.sqrt(max(r1, 0.0)) / 2
    s2 = math.sqrt(max(r2, 0.0)) / 2
    return [base1 - s1, base1 + s1, base2 - s2, base2 + s2]


# ---------- KK_n^l ----------


def kk_graph_partition(n: int, l: int) -> Partition:
    """Hub, rest of copy one, copy-two neighbours of the hub, rest of copy two."""
    blocks = [[0], range(1, n), range(n, n + l)]
    if l < n:
        blocks.append(range(n + l, 2 * n))
    return Partition.from_blocks(blocks, 2 * n)


def kk_graph_quotient(n: int, l: int, alpha: float) -> DenseMatrix:
    """4x4 quotient; 3x3 when l = n and the last block is empty."""
    a = alpha
    full = np.array(
        [
            [(n + l - 1) * a, (a - 1) * (n - 1), (a - 1) * l, 0.0],
            [a - 1, a * (n - 1) + (a - 1) * (n - 2), 0.0, 0.0],
            [a - 1, 0.0, a * n + (a - 1) * (l - 1), (a - 1) * (n - l)],
            [0.0, 0.0, (a - 1) * l, a * (n - 1) + (a - 1) * (n - l - 1)],
        ]
    )
    if l == n:
        full = full[:3, :3]
    return DenseMatrix.from_array(full)


def _check_kk(n: int, l: int) -> None:
    _require(n >= 3, f"KK graph needs n >= 3, got {n}")
    _require(1 <= l <= n, f"KK graph needs 1 <= l <= n, got l={l}, n={n}")


def spec_kk_graph(n: int, l: int, alpha: float) -> Spectrum:
    """
    {(a(n-2)+1)^(2n-l-3), (a(n-1)+1)^(l-1)} plus the quotient eigenvalues.

    For l = n the fourth block is empty; its formal quotient root
    a(n-2)+1 moves into the fixed part.
    """
    _check_kk(n, l)
    alpha = _open_alpha(alpha, "KK graph")

    shared = 2 * n - l - 3 + (1 if l == n else 0)
    pairs = [(alpha * (n - 2) + 1, shared), (alpha * (n - 1) + 1, l - 1)]
    pairs += _quotient_values(kk_graph_quotient(n, l, alpha), kk_graph_partition(n, l).sizes)
    return Spectrum.from_pairs(pairs)


def printed_kk_poly(n: int, l: int, alpha: float) -> RealPoly:
    """The quartic as printed with the KK theorem (C_0..C_4)."""
    a = alpha
    c3 = 2 * n**3 - 6 * n**2 + 6 * n - 2 - a * l + 7 * a + 2 * l
    c2 = (
        n**2 - 6 * n + 6 + a * (13 * n**2 - 31 * n + 18)
        + l * (5 * a * n - 8 * a + l - 2 * n + 2)
    )
    c1 = (
        -2 * n**2 + 6 * n - 4 + a * (19 * n**2 - 38 * n + 21)
        + l * (-34 * a * n + 34 * a - 2 * l + 3)
        + 10 * a * n**3 - 52 * a * n**2 + 78 * a * n - 36 * a
        + 26 * a * l * n - 20 * a * l + l**2
    )
    c0 = (
        4 * a**4 * l * n**3 - 20 * a**4 * l * n**2 + 32 * a**4 * l * n - 16 * a**4 * l
        + 4 * a**4 * n**4 - 20 * a**4 * n**3 + 36 * a**4 * n**2 - 28 * a**4 * n + 8 * a**4
        - 4 * a**3 * l**2 * n + 6 * a**3 * l**2 - 4 * a**3 * l * n**3 + 34 * a**3 * l * n**2
        - 70 * a**3 * l * n + 40 * a**3 * l - 4 * a**3 * n**4 + 28 * a**3 * n**3
        - 64 * a**3 * n**2 + 60 * a**3 * n - 20 * a**3
        + 8 * a**2 * l**2 * n - 13 * a**2 * l**2 + a**2 * l * n**3 - 22 * a**2 * l * n**2
        + 57 * a**2 * l * n - 36 * a**2 * l + a**2 * n**4 - 13 * a**2 * n**3
        + 41 * a**2 * n**2 - 47 * a**2 * n + 18 * a**2
        - 5 * a * l**2 * n + 9 * a * l**2 + 7 * a * l * n**2 - 21 * a * l * n + 14 * a * l
        + 2 * a * n**3 - 11 * a * n**2 + 16 * a * n - 7 * a
        + l**2 * n - 2 * l**2 - l * n**2 + 3 * l * n - 2 * l + n**2 - 2 * n + 1
    )
    return RealPoly.from_coeffs([c0, c1, c2, c3, 1.0])


# ---------- core-satellite ----------


def spec_core_satellite(c: int, s: int, eta: int, alpha: float) -> Spectrum:
    """
    Theta(c, s, eta) = K_c v eta K_s, as the regular join with
    k = c - 1, n1 = c, r = s - 1, n2 = eta s:

        lambda_1(M), lambda_2(M)
        a(c - 1 + eta s) + (1 - a)          (c - 1 times)
        a(s - 1 + c) + (a - 1)(s - 1)       (eta - 1 times)
        a(s - 1 + c) - (a - 1)              (eta s - eta times)
    """
    _require(c >= 1, f"core-satellite needs c >= 1, got {c}")
    _require(s >= 1, f"core-satellite needs s >= 1, got {s}")
    _require(eta >= 2, f"core-satellite needs eta >= 2, got {eta}")
    alpha = check_alpha(alpha)

    m = join_quotient(c - 1, c, s - 1, eta * s, alpha)
    pairs = [(v, 1) for v in eigvals_2x2(m)]
    pairs += [
        (alpha * (c - 1 + eta * s) + (1 - alpha), c - 1),
        (alpha * (s - 1 + c) + (alpha - 1) * (s - 1), eta - 1),
        (alpha * (s - 1 + c) - (alpha - 1), eta * s - eta),
    ]
    return Spectrum.from_pairs(pairs)


# ---------- printed-formula cross-checks ----------


@dataclass(frozen=True)
class FormulaDiscrepancy:
    """How far a printed closed form sits from the quotient computation."""

    formula: str
    coefficient_deviation: float
    value_deviation: float
    tolerance: float

    @property
    def agrees(self) -> bool:
        return max(self.coefficient_deviation, self.value_deviation) <= self.tolerance

    def note(self) -> str:
        if self.agrees:
            return f"{self.formula}: printed form agrees with the quotient"
        return (
            f"{self.formula}: printed form differs from the quotient "
            f"(coefficients {self.coefficient_deviation:.3e}, "
            f"values {self.value_deviation:.3e})"
        )


def formula_discrepancy(
    family: str,
    params: Sequence[int],
    alpha: float,
    tol: float = 1e-8,
) -> FormulaDiscrepancy:
    """
    Compare a printed formula with its quotient matrix.

    family is "pineapple" (p, q), "kk-graph" (n, l) or "h-graph" (n, l).
    Polynomials are compared coefficient-wise and by their scaled residual at
    the quotient eigenvalues; the H radicals are compared value by value.
    """
    alpha = check_alpha(alpha)

    if family == "h-graph":
        n, l = params
        q = h_graph_quotient(n, l, alpha)
        exact = np.sort(eigen_sym(symmetrized_quotient(q, h_graph_partition(n, l).sizes)).values())
        printed = np.sort(np.asarray(h_graph_radicals(n, l, alpha)))
        scale = np.maximum(1.0, np.abs(exact))
        value_dev = float(np.max(np.abs(printed - exact) / scale))
        coeff_dev = coefficient_deviation(RealPoly.from_roots(printed), char_poly(q))
        return FormulaDiscrepancy("h-graph radicals", coeff_dev, value_dev, tol)

    if family == "pineapple":
        p, q_ = params
        _require(p >= 3 and q_ >= 1, f"pineapple needs p >= 3, q >= 1, got {p}, {q_}")
        q = pineapple_quotient(p, q_, alpha)
        sizes = pineapple_partition(p, q_).sizes
        printed_poly = printed_pineapple_poly(p, q_, alpha)
    elif family == "kk-graph":
        n, l = params
        _check_kk(n, l)
        q = kk_graph_quotient(n, l, alpha)
        if l == n:
            q = DenseMatrix.from_array(
                np.pad(q.array, ((0, 1), (0, 1)))
                + np.diag([0.0, 0.0, 0.0, alpha * (n - 2) + 1])
            )
            sizes = kk_graph_partition(n, l).sizes + [1]
        else:
            sizes = kk_graph_partition(n, l).sizes
        printed_poly = printed_kk_poly(n, l, alpha)
    else:
        raise ParameterOutOfRange(f"no printed formula for family {family!r}")

    exact_values = eigen_sym(symmetrized_quotient(q, sizes)).values()
    value_dev = max((scaled_residual(printed_poly, x) for x in exact_values), default=0.0)
    coeff_dev = coefficient_deviation(printed_poly, char_poly(q))
    return FormulaDiscrepancy(f"{family} polynomial", coeff_dev, value_dev, tol)
