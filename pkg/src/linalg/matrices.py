# src/linalg/matrices.py
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from src.errors import AlphaOutOfRange, InvalidVertex, SizeMismatch
from src.graphs.graph import Graph

ArrayLike = Union[np.ndarray, Sequence[Sequence[float]]]


def check_alpha(alpha: float) -> float:
    """Validate alpha in [0, 1] (inclusive) and return it as float."""
    value = float(alpha)
    if not 0.0 <= value <= 1.0 or np.isnan(value):
        raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {alpha}")
    return value


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Real rows x cols matrix; quotient matrices are generally non-symmetric."""

    array: np.ndarray

    @classmethod
    def from_array(cls, entries: ArrayLike) -> "DenseMatrix":
        a = np.asarray(entries, dtype=float)
        if a.ndim != 2:
            raise SizeMismatch(f"expected a 2-D matrix, got shape {a.shape}")
        return cls(_frozen(a))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_dict(self) -> Dict[str, Any]:
        return {"rows": self.rows, "cols": self.cols, "entries": self.array.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True, eq=False)
class SymMatrix(DenseMatrix):
    """
    Dense real symmetric matrix.

    from_array rejects anything that is not exactly symmetric unless asked to
    symmetrize, so every SymMatrix satisfies a[i, j] == a[j, i] bit for bit.
    """

    @classmethod
    def from_array(cls, entries: ArrayLike, *, symmetrize: bool = False) -> "SymMatrix":
        a = np.asarray(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise SizeMismatch(f"symmetric matrix must be square, got shape {a.shape}")
        if symmetrize:
            a = (a + a.T) / 2.0
        elif not np.array_equal(a, a.T):
            raise ValueError("matrix is not exactly symmetric; pass symmetrize=True")
        return cls(_frozen(a))

    @property
    def n(self) -> int:
        return self.rows

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "entries": self.array.tolist()}


# ---------- Graph matrices ----------


def adjacency_matrix(g: Graph) -> SymMatrix:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return SymMatrix.from_array(a)


def degree_matrix(g: Graph) -> SymMatrix:
    return SymMatrix.from_array(np.diag(np.asarray(g.degrees(), dtype=float)))


def l_alpha_matrix(g: Graph, alpha: float) -> SymMatrix:
    """L_alpha(G) = alpha D(G) + (alpha - 1) A(G)."""
    alpha = check_alpha(alpha)
    d = degree_matrix(g).array
    a = adjacency_matrix(g).array
    return SymMatrix.from_array(alpha * d + (alpha - 1.0) * a)


def a_alpha_matrix(g: Graph, alpha: float) -> SymMatrix:
    """A_alpha(G) = alpha D(G) + (1 - alpha) A(G)."""
    alpha = check_alpha(alpha)
    d = degree_matrix(g).array
    a = adjacency_matrix(g).array
    return SymMatrix.from_array(alpha * d + (1.0 - alpha) * a)


def laplacian_matrix(g: Graph) -> SymMatrix:
    """L(G) = D(G) - A(G), i.e. 2 L_{1/2}(G)."""
    return SymMatrix.from_array(degree_matrix(g).array - adjacency_matrix(g).array)


def signless_laplacian_matrix(g: Graph) -> SymMatrix:
    """Q(G) = D(G) + A(G), i.e. 2 A_{1/2}(G)."""
    return SymMatrix.from_array(degree_matrix(g).array + adjacency_matrix(g).array)


# ---------- Matrix helpers ----------


def kronecker(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Block matrix [a_ij * B]; shape (m p) x (n q)."""
    out = np.kron(a.array, b.array)
    if isinstance(a, SymMatrix) and isinstance(b, SymMatrix):
        return SymMatrix.from_array(out, symmetrize=True)
    return DenseMatrix.from_array(out)


def identity(n: int) -> SymMatrix:
    return SymMatrix.from_array(np.eye(n))


def principal_submatrix(m: SymMatrix, v: int) -> SymMatrix:
    """Delete row and column v."""
    if not 0 <= v < m.n:
        raise InvalidVertex(f"index {v} is not in 0..{m.n - 1}")
    keep: List[int] = [i for i in range(m.n) if i != v]
    return SymMatrix.from_array(m.array[np.ix_(keep, keep)])

