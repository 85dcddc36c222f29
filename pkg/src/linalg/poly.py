# src/linalg/poly.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from src.errors import SizeMismatch
from src.linalg.matrices import DenseMatrix


@dataclass(frozen=True)
class RealPoly:
    """
    Real polynomial c_0 + c_1 x + ... + c_d x^d, coefficients low degree first.

    Trailing zero coefficients are trimmed; the zero polynomial is (0.0,).
    """

    coeffs: tuple

    def __post_init__(self) -> None:
        trimmed = P.polytrim(np.asarray(self.coeffs, dtype=float), tol=0)
        object.__setattr__(self, "coeffs", tuple(float(c) for c in trimmed))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[float]) -> "RealPoly":
        return cls(tuple(coeffs))

    @classmethod
    def from_high_first(cls, coeffs: Sequence[float]) -> "RealPoly":
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_roots(cls, roots: Iterable[float]) -> "RealPoly":
        roots = list(roots)
        if not roots:
            return cls((1.0,))
        return cls(tuple(P.polyfromroots(roots)))

    @classmethod
    def one(cls) -> "RealPoly":
        return cls((1.0,))

    @classmethod
    def x(cls) -> "RealPoly":
        return cls((0.0, 1.0))

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0.0

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.leading == 1.0

    def coefficients_high_first(self) -> List[float]:
        return list(reversed(self.coeffs))

    def __add__(self, other: "RealPoly") -> "RealPoly":
        return add(self, other)

    def __sub__(self, other: "RealPoly") -> "RealPoly":
        return add(self, scale(other, -1.0))

    def __mul__(self, other: "RealPoly") -> "RealPoly":
        return multiply(self, other)

    def __call__(self, x: float) -> float:
        return evaluate(self, x)


# ---------- poly_ops ----------


def add(p: RealPoly, q: RealPoly) -> RealPoly:
    return RealPoly(tuple(P.polyadd(p.coeffs, q.coeffs)))


def multiply(p: RealPoly, q: RealPoly) -> RealPoly:
    return RealPoly(tuple(P.polymul(p.coeffs, q.coeffs)))


def scale(p: RealPoly, factor: float) -> RealPoly:
    return RealPoly(tuple(c * factor for c in p.coeffs))


def evaluate(p: RealPoly, x: float) -> float:
    """Horner evaluation, highest coefficient first."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return float(acc)


def scaled_residual(p: RealPoly, x: float) -> float:
    """
    |p(x)| relative to the size of the terms being summed.

    Dividing by max(1, sum |c_i| |x|^i) makes residuals of high-degree
    polynomials comparable to a fixed tolerance.
    """
    magnitude = evaluate(RealPoly(tuple(abs(c) for c in p.coeffs)), abs(x))
    return abs(evaluate(p, x)) / max(1.0, magnitude)


def coefficient_deviation(p: RealPoly, q: RealPoly) -> float:
    """
    Largest coefficient difference, relative to max(1, largest |coefficient| of q).
    """
    size = max(len(p.coeffs), len(q.coeffs))
    a = np.zeros(size)
    b = np.zeros(size)
    a[: len(p.coeffs)] = p.coeffs
    b[: len(q.coeffs)] = q.coeffs
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(np.abs(b)))))


# ---------- Characteristic polynomial ----------


def char_poly(m: DenseMatrix) -> RealPoly:
    """
    det(x I - M) by the Faddeev-LeVerrier trace recurrence.

        M_0 = 0, c_n = 1
        M_k = A M_{k-1} + c_{n-k+1} I
        c_{n-k} = -trace(A M_k) / k

    The 0x0 matrix has characteristic polynomial 1.
    """
    if not m.is_square:
        raise SizeMismatch(f"char_poly needs a square matrix, got {m.rows}x{m.cols}")

    a = m.array
    n = a.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0

    mk = np.zeros((n, n))
    eye = np.eye(n)
    for k in range(1, n + 1):
        mk = a @ mk + coeffs[n - k + 1] * eye
        coeffs[n - k] = -np.trace(a @ mk) / k

    return RealPoly(tuple(coeffs))
