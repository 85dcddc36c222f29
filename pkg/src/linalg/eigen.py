# src/linalg/eigen.py
"""
Cyclic Jacobi eigensolver and the Spectrum type.

This solver is the oracle every closed-form spectrum is checked against, so
it is written from scratch on plain numpy arrays instead of calling LAPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Tuple

import numpy as np

from src import config
from src.errors import ConvergenceFailure, SizeMismatch
from src.linalg.matrices import DenseMatrix, SymMatrix


# ---------- Spectrum ----------


def round_significant(value: float, digits: int = config.SIGNIFICANT_DIGITS) -> float:
    if abs(value) < 10.0 ** -digits:
        return 0.0
    return float(f"{value:.{digits}g}")


def same_bucket(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalue multiset as (value, multiplicity) pairs, sorted descending.

    Consecutive values differ by more than the grouping tolerance that built
    the spectrum, so exact multiplicities survive floating point noise.
    """

    entries: Tuple[Tuple[float, int], ...]

    @classmethod
    def from_values(
        cls,
        values: Iterable[float],
        tol: float = config.GROUPING_TOLERANCE,
    ) -> "Spectrum":
        ordered = sorted((float(v) for v in values), reverse=True)
        buckets: List[List[float]] = []
        for v in ordered:
            if buckets and same_bucket(buckets[-1][-1], v, tol):
                buckets[-1].append(v)
            else:
                buckets.append([v])
        return cls(tuple((float(np.mean(b)), len(b)) for b in buckets))

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[Tuple[float, int]],
        tol: float = config.GROUPING_TOLERANCE,
    ) -> "Spectrum":
        """Build from (value, multiplicity) pairs; zero multiplicities are dropped."""
        values: List[float] = []
        for value, mult in pairs:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {value}")
            values.extend([float(value)] * int(mult))
        return cls.from_values(values, tol)

    def values(self) -> np.ndarray:
        """All eigenvalues, repeated by multiplicity, in descending order."""
        return np.array(
            [value for value, mult in self.entries for _ in range(mult)], dtype=float
        )

    @property
    def order(self) -> int:
        return sum(mult for _, mult in self.entries)

    @property
    def max_value(self) -> float:
        return self.entries[0][0]

    @property
    def min_value(self) -> float:
        return self.entries[-1][0]

    @property
    def spectral_radius(self) -> float:
        if not self.entries:
            return 0.0
        return max(abs(self.max_value), abs(self.min_value))

    def count_near(self, value: float, tol: float = config.TOLERANCE) -> int:
        """How many eigenvalues (with multiplicity) lie within tol of value."""
        return sum(
            mult for v, mult in self.entries
            if abs(v - value) <= tol * max(1.0, abs(value))
        )

    def contains(self, value: float, tol: float = config.TOLERANCE) -> bool:
        return self.count_near(value, tol) > 0

    def union(self, other: "Spectrum", tol: float = config.GROUPING_TOLERANCE) -> "Spectrum":
        return Spectrum.from_values(
            np.concatenate([self.values(), other.values()]), tol
        )

    def to_records(self, digits: int = config.SIGNIFICANT_DIGITS) -> List[Dict[str, Any]]:
        """(value, multiplicity) dicts; values below 10^-digits print as 0."""
        return [
            {"value": round_significant(value, digits), "multiplicity": mult}
            for value, mult in self.entries
        ]

    def __len__(self) -> int:
        return self.order


# ---------- Jacobi rotations ----------


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate a[p, q] in place with one Jacobi rotation (A <- J^T A J)."""
    apq = a[p, q]
    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
    if tau >= 0.0:
        t = 1.0 / (tau + math.hypot(1.0, tau))
    else:
        t = -1.0 / (-tau + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    rot = np.array([[c, s], [-s, c]])
    cols = [p, q]
    a[:, cols] = a[:, cols] @ rot
    a[cols, :] = rot.T @ a[cols, :]
    a[p, q] = 0.0
    a[q, p] = 0.0
    v[:, cols] = v[:, cols] @ rot


def jacobi_eigh(
    m: SymMatrix,
    *,
    max_sweeps: int = config.JACOBI_MAX_SWEEPS,
    off_tol: float = config.JACOBI_OFF_TOLERANCE,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Cyclic-by-row Jacobi diagonalization.

    Returns:
        (values, vectors): eigenvalues in descending order and the orthogonal
        matrix whose columns are the matching eigenvectors.

    Raises:
        ConvergenceFailure if the off-diagonal norm is still above
        off_tol * max(1, ||M||_F) after max_sweeps sweeps.
    """
    a = np.array(m.array, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)

    scale = max(1.0, float(np.linalg.norm(a, "fro")))
    target = off_tol * scale
    # entries this small are left alone; n^2 of them still sit below target
    negligible = target / max(1, n * n)

    sweeps = 0
    while _off_norm(a) > target:
        if sweeps >= max_sweeps:
            raise ConvergenceFailure(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-norm {_off_norm(a):.3e}, target {target:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > negligible:
                    _rotate(a, v, p, q)
        sweeps += 1

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    values: np.ndarray
    vectors: np.ndarray

    @property
    def spectrum(self) -> Spectrum:
        return Spectrum.from_values(self.values)

    def reconstruct(self) -> np.ndarray:
        return self.vectors @ np.diag(self.values) @ self.vectors.T


def eigen_decomposition(m: SymMatrix) -> EigenDecomposition:
    values, vectors = jacobi_eigh(m)
    return EigenDecomposition(values, vectors)


def eigen_sym(m: SymMatrix, tol: float = config.GROUPING_TOLERANCE) -> Spectrum:
    """Spectrum of a symmetric matrix via the Jacobi oracle."""
    values, _ = jacobi_eigh(m)
    return Spectrum.from_values(values, tol)


def eigvals_2x2(m: DenseMatrix) -> List[float]:
    """
    Eigenvalues of a real 2x2 matrix known to have a real spectrum
    (e.g. a quotient of a symmetric matrix), from trace and determinant.
    """
    if m.rows != 2 or m.cols != 2:
        raise SizeMismatch(f"expected 2x2 matrix, got {m.rows}x{m.cols}")
    (a, b), (c, d) = m.array
    trace = a + d
    det = a * d - b * c
    disc = max(trace * trace - 4.0 * det, 0.0)
    root = math.sqrt(disc)
    return [(trace + root) / 2.0, (trace - root) / 2.0]
