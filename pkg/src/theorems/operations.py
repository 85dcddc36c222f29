# src/theorems/operations.py
"""
Spectra of L_alpha under graph operations: union, join, the three products,
coalescence and the splitting graph.

Functions here take spectra (or characteristic polynomials) of the factors,
not the graphs themselves, so they can be fed from any source.
"""

from typing import Callable, List, Sequence, Tuple

import numpy as np

from src import config
from src.errors import DegreeMismatch, NotOrthogonal, NotRegular
from src.linalg.eigen import Spectrum, eigen_decomposition, eigvals_2x2, same_bucket
from src.linalg.matrices import DenseMatrix, SymMatrix, check_alpha
from src.linalg.poly import RealPoly

EigenPair = Tuple[float, np.ndarray]


# ---------- union ----------


def spec_union(sg: Spectrum, sh: Spectrum) -> Spectrum:
    return sg.union(sh)


# ---------- join ----------


def _orthonormal_complement(w: np.ndarray) -> np.ndarray:
    """Columns spanning w-perp, from QR of [w / |w|, I]."""
    d = w.shape[0]
    basis = np.column_stack([w / np.linalg.norm(w), np.eye(d)])
    q, _ = np.linalg.qr(basis)
    return q[:, 1:d]


def orthogonal_eigenpairs(
    m: SymMatrix,
    tol: float = config.GROUPING_TOLERANCE,
) -> List[EigenPair]:
    """
    Eigenpairs of m whose eigenvectors are orthogonal to the all-ones vector.

    Every eigenspace of dimension d meets j-perp in dimension >= d - 1; this
    returns an orthonormal basis of each intersection.
    """
    decomposition = eigen_decomposition(m)
    values, vectors = decomposition.values, decomposition.vectors
    n = values.shape[0]
    ones = np.ones(n)

    groups: List[List[int]] = []
    for i in range(n):
        if groups and same_bucket(values[groups[-1][-1]], values[i], tol):
            groups[-1].append(i)
        else:
            groups.append([i])

    pairs: List[EigenPair] = []
    for idx in groups:
        space = vectors[:, idx]
        value = float(np.mean(values[idx]))
        overlap = ones @ space
        if np.linalg.norm(overlap) <= config.TOLERANCE:
            kept = space
        elif len(idx) == 1:
            continue
        else:
            kept = space @ _orthonormal_complement(overlap)
        for col in range(kept.shape[1]):
            pairs.append((value, kept[:, col]))
    return pairs


def _check_orthogonal(pairs: Sequence[EigenPair], what: str) -> None:
    for value, x in pairs:
        x = np.asarray(x, dtype=float)
        if abs(float(np.sum(x))) > config.TOLERANCE * max(1.0, float(np.linalg.norm(x))):
            raise NotOrthogonal(
                f"{what} eigenvector for {value:.6g} is not orthogonal to the all-ones vector"
            )


def join_lifted_eigs(
    pairs_g: Sequence[EigenPair],
    pairs_h: Sequence[EigenPair],
    n1: int,
    n2: int,
    alpha: float,
) -> List[float]:
    """
    For eigenpairs (lambda, x) of L_alpha(G) and (mu, y) of L_alpha(H) with
    x, y orthogonal to the all-ones vector, a n2 + lambda and a n1 + mu are
    eigenvalues of L_alpha(G v H).
    """
    alpha = check_alpha(alpha)
    _check_orthogonal(pairs_g, "G")
    _check_orthogonal(pairs_h, "H")
    return [alpha * n2 + lam for lam, _ in pairs_g] + [alpha * n1 + mu for mu, _ in pairs_h]


def join_quotient(k: int, n1: int, r: int, n2: int, alpha: float) -> DenseMatrix:
    """2x2 quotient of L_alpha(G v H) for G k-regular on n1 and H r-regular on n2."""
    return DenseMatrix.from_array(
        [
            [(2 * k + n2) * alpha - k, (alpha - 1) * n2],
            [(alpha - 1) * n1, (2 * r + n1) * alpha - r],
        ]
    )


def _drop_principal(spec: Spectrum, degree: int, order: int, what: str) -> List[Tuple[float, int]]:
    """Adjacency spectrum of a regular graph minus one copy of its degree."""
    if spec.order != order:
        raise NotRegular(f"{what} adjacency spectrum has {spec.order} values, expected {order}")
    if not spec.contains(degree):
        raise NotRegular(f"{what} adjacency spectrum does not contain its degree {degree}")

    out: List[Tuple[float, int]] = []
    dropped = False
    for value, mult in spec.entries:
        if not dropped and abs(value - degree) <= config.TOLERANCE * max(1.0, abs(degree)):
            mult -= 1
            dropped = True
        out.append((value, mult))
    return out


def spec_join_regular(
    k: int,
    n1: int,
    r: int,
    n2: int,
    spec_a_g: Spectrum,
    spec_a_h: Spectrum,
    alpha: float,
) -> Spectrum:
    """
    {lambda_1(M), lambda_2(M)}
      + {a(k + n2) + (a - 1) lambda_i(A(G))}, i >= 2
      + {a(r + n1) + (a - 1) lambda_j(A(H))}, j >= 2
    """
    alpha = check_alpha(alpha)
    rest_g = _drop_principal(spec_a_g, k, n1, "G")
    rest_h = _drop_principal(spec_a_h, r, n2, "H")

    pairs = [(v, 1) for v in eigvals_2x2(join_quotient(k, n1, r, n2, alpha))]
    pairs += [(alpha * (k + n2) + (alpha - 1) * lam, m) for lam, m in rest_g]
    pairs += [(alpha * (r + n1) + (alpha - 1) * lam, m) for lam, m in rest_h]
    return Spectrum.from_pairs(pairs)


# ---------- products ----------


def _pairwise(sg: Spectrum, sh: Spectrum, combine: Callable[[float, float], float]) -> Spectrum:
    return Spectrum.from_pairs(
        [
            (combine(lam, mu), m1 * m2)
            for lam, m1 in sg.entries
            for mu, m2 in sh.entries
        ]
    )


def spec_cartesian(sg: Spectrum, sh: Spectrum) -> Spectrum:
    """All sums lambda_i(L_alpha(G)) + mu_j(L_alpha(H))."""
    return _pairwise(sg, sh, lambda lam, mu: lam + mu)


def spec_direct_subset(sg: Spectrum, r: int) -> List[float]:
    """r lambda_i(L_alpha(G)) lie in Spec(L_alpha(G x H)) when H is r-regular."""
    return [r * lam for lam in sg.values()]


def _require_degree(spec_a: Spectrum, degree: int, what: str) -> None:
    if not spec_a.contains(degree):
        raise NotRegular(f"{what} adjacency spectrum does not contain its degree {degree}")


def spec_direct_regular(
    r1: int,
    r2: int,
    spec_a_g: Spectrum,
    spec_a_h: Spectrum,
    alpha: float,
) -> Spectrum:
    """a r1 r2 + (a - 1) lambda_i(A(G)) lambda_j(A(H)) over all pairs."""
    alpha = check_alpha(alpha)
    _require_degree(spec_a_g, r1, "G")
    _require_degree(spec_a_h, r2, "H")
    return _pairwise(
        spec_a_g, spec_a_h, lambda lam, mu: alpha * r1 * r2 + (alpha - 1) * lam * mu
    )


def spec_strong_subset(sg: Spectrum, r: int, alpha: float) -> List[float]:
    """(r + 1) lambda_i(L_alpha(G)) + 2ar - r for H r-regular."""
    alpha = check_alpha(alpha)
    return [(r + 1) * lam + 2 * alpha * r - r for lam in sg.values()]


def spec_strong_regular(
    r1: int,
    r2: int,
    spec_a_g: Spectrum,
    spec_a_h: Spectrum,
    alpha: float,
) -> Spectrum:
    """a(r1 r2 + r1 + r2) + (a - 1)(lambda mu + lambda + mu) over all pairs."""
    alpha = check_alpha(alpha)
    _require_degree(spec_a_g, r1, "G")
    _require_degree(spec_a_h, r2, "H")
    return _pairwise(
        spec_a_g,
        spec_a_h,
        lambda lam, mu: alpha * (r1 * r2 + r1 + r2) + (alpha - 1) * (lam * mu + lam + mu),
    )


# ---------- polynomial identities ----------


def charpoly_coalescence(p_g: RealPoly, p_g_u: RealPoly, p_h: RealPoly, p_h_v: RealPoly) -> RealPoly:
    """
    P(G.H) = P(G) P(H_v) + P(G_u) P(H) - x P(G_u) P(H_v)

    where G_u, H_v are the vertex-deleted principal submatrices.
    """
    if p_g.degree < 1 or p_h.degree < 1:
        raise DegreeMismatch("coalescence needs both factors to have at least one vertex")
    if p_g_u.degree != p_g.degree - 1:
        raise DegreeMismatch(
            f"P(G_u) has degree {p_g_u.degree}, expected {p_g.degree - 1}"
        )
    if p_h_v.degree != p_h.degree - 1:
        raise DegreeMismatch(
            f"P(H_v) has degree {p_h_v.degree}, expected {p_h.degree - 1}"
        )
    return p_g * p_h_v + p_g_u * p_h - RealPoly.x() * p_g_u * p_h_v


def splitting_quadratic(k: int, lam: float, alpha: float) -> RealPoly:
    """x^2 - 3akx + 2a^2k^2 + (-(a - 1)x + (a - 1)ak) lam - (a - 1)^2 lam^2."""
    b = alpha - 1
    return RealPoly.from_coeffs(
        [
            2 * alpha * alpha * k * k + b * alpha * k * lam - b * b * lam * lam,
            -3 * alpha * k - b * lam,
            1.0,
        ]
    )


def charpoly_splitting_regular(k: int, spec_a: Spectrum, alpha: float) -> RealPoly:
    """Characteristic polynomial of L_alpha(S(G)) for a k-regular G, degree 2n."""
    alpha = check_alpha(alpha)
    _require_degree(spec_a, k, "G")
    result = RealPoly.one()
    for lam in spec_a.values():
        result = result * splitting_quadratic(k, lam, alpha)
    return result
