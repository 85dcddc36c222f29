# src/linalg/quotient.py
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from src import config
from src.errors import NotEquitable, ParameterOutOfRange
from src.graphs.graph import Graph
from src.linalg.eigen import Spectrum, eigen_sym
from src.linalg.matrices import DenseMatrix, SymMatrix


@dataclass(frozen=True)
class Partition:
    """Ordered, disjoint, non-empty vertex blocks covering 0..n-1."""

    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "Partition":
        out = tuple(tuple(int(v) for v in block) for block in blocks)
        seen: List[int] = [v for block in out for v in block]

        if any(len(block) == 0 for block in out):
            raise ParameterOutOfRange("partition blocks must be non-empty")
        if len(seen) != len(set(seen)):
            raise ParameterOutOfRange("partition blocks overlap")
        if sorted(seen) != list(range(n)):
            raise ParameterOutOfRange(f"partition does not cover exactly 0..{n - 1}")
        return cls(out)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((v,) for v in range(n)))

    @classmethod
    def single(cls, n: int) -> "Partition":
        return cls.from_blocks([range(n)], n)

    @property
    def sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)


def quotient_matrix(
    m: SymMatrix,
    partition: Partition,
    tol: float = config.EQUITABLE_TOLERANCE,
) -> DenseMatrix:
    """
    Matrix of constant block row sums c_ij.

    Raises:
        NotEquitable naming the first block pair whose rows disagree by more
        than tol.
    """
    if sum(partition.sizes) != m.n:
        raise ParameterOutOfRange(
            f"partition covers {sum(partition.sizes)} vertices, matrix has {m.n}"
        )

    k = len(partition)
    q = np.zeros((k, k))
    for i, rows in enumerate(partition.blocks):
        for j, cols in enumerate(partition.blocks):
            sums = m.array[np.ix_(rows, cols)].sum(axis=1)
            spread = float(sums.max() - sums.min())
            if spread > tol:
                lo = rows[int(np.argmin(sums))]
                hi = rows[int(np.argmax(sums))]
                raise NotEquitable(
                    f"block pair ({i}, {j}) is not equitable: row {lo} sums to "
                    f"{sums.min():.6g}, row {hi} sums to {sums.max():.6g}"
                )
            q[i, j] = float(sums[0])
    return DenseMatrix.from_array(q)


def symmetrized_quotient(q: DenseMatrix, sizes: Sequence[int]) -> SymMatrix:
    """
    S Q S^{-1} with S = diag(sqrt(n_i)).

    For a quotient of a symmetric matrix n_i c_ij = n_j c_ji, so this is
    symmetric up to roundoff and shares Q's eigenvalues.
    """
    s = np.sqrt(np.asarray(sizes, dtype=float))
    sym = (s[:, None] * q.array) / s[None, :]
    return SymMatrix.from_array(sym, symmetrize=True)


def quotient_spectrum(
    m: SymMatrix,
    partition: Partition,
    tol: float = config.EQUITABLE_TOLERANCE,
) -> Spectrum:
    """Eigenvalues of the quotient; each one is also an eigenvalue of m."""
    q = quotient_matrix(m, partition, tol)
    return eigen_sym(symmetrized_quotient(q, partition.sizes))


def coarsest_equitable_partition(g: Graph) -> Partition:
    """
    Colour refinement on the adjacency structure.

    Starts from one block and splits blocks by (colour, neighbour colour
    counts) until stable. The result is equitable for A(G), so degrees are
    constant on blocks and it is equitable for every L_alpha(G) as well.
    Blocks are ordered by their smallest vertex.
    """
    adjacency = g.adjacency_lists()
    colour: Dict[int, int] = {v: 0 for v in range(g.n)}

    while True:
        signatures = {
            v: (colour[v], tuple(sorted(Counter(colour[w] for w in adjacency[v]).items())))
            for v in range(g.n)
        }
        relabel: Dict[tuple, int] = {}
        for v in range(g.n):
            relabel.setdefault(signatures[v], len(relabel))
        refined = {v: relabel[signatures[v]] for v in range(g.n)}
        if len(set(refined.values())) == len(set(colour.values())):
            break
        colour = refined

    blocks: Dict[int, List[int]] = {}
    for v in range(g.n):
        blocks.setdefault(colour[v], []).append(v)
    return Partition.from_blocks(sorted(blocks.values(), key=lambda b: b[0]), g.n)
