# src/theorems/basic.py
"""
Closed forms for single graphs: complete, complete bipartite, star,
regular graphs and twin classes.
"""

import math
from typing import List, Optional, Tuple

from src.errors import NotRegular, ParameterOutOfRange
from src.graphs.graph import Graph, TwinKind, twin_classes
from src.graphs.structure import regular_degree
from src.linalg.eigen import Spectrum, eigen_sym
from src.linalg.matrices import adjacency_matrix, check_alpha


def spec_complete(n: int, alpha: float) -> Spectrum:
    """{2an - 2a - n + 1, (an - 2a + 1)^(n-1)} for K_n."""
    alpha = check_alpha(alpha)
    if n < 1:
        raise ParameterOutOfRange(f"complete graph needs n >= 1, got {n}")
    top = 2 * alpha * n - 2 * alpha - n + 1
    rest = alpha * n - 2 * alpha + 1
    return Spectrum.from_pairs([(top, 1), (rest, n - 1)])


def _bipartite_extremes(p: int, q: int, alpha: float) -> Tuple[float, float]:
    total = alpha * (p + q)
    disc = alpha * alpha * (p + q) ** 2 + 4 * p * q * (1 - 2 * alpha)
    root = math.sqrt(max(disc, 0.0))
    return (total + root) / 2.0, (total - root) / 2.0


def spec_complete_bipartite(p: int, q: int, alpha: float) -> Spectrum:
    """
    K_{p,q} with p >= q >= 1:
    {lambda_1, (ap)^(q-1), (aq)^(p-1), lambda_n}, the extremes being
    (a(p+q) +- sqrt(a^2 (p+q)^2 + 4pq(1 - 2a))) / 2.
    """
    alpha = check_alpha(alpha)
    if not p >= q >= 1:
        raise ParameterOutOfRange(f"complete bipartite needs p >= q >= 1, got p={p}, q={q}")
    high, low = _bipartite_extremes(p, q, alpha)
    return Spectrum.from_pairs(
        [(high, 1), (alpha * p, q - 1), (alpha * q, p - 1), (low, 1)]
    )


def spec_star(n: int, alpha: float) -> Spectrum:
    """Star K_{1,n-1}: the two extremes and alpha with multiplicity n - 2."""
    alpha = check_alpha(alpha)
    if n < 2:
        raise ParameterOutOfRange(f"star needs n >= 2, got {n}")
    high, low = _bipartite_extremes(n - 1, 1, alpha)
    return Spectrum.from_pairs([(high, 1), (alpha, n - 2), (low, 1)])


def _require_regular(g: Graph, what: str = "graph") -> int:
    k = regular_degree(g)
    if k is None:
        raise NotRegular(f"{what} is not regular (degrees {sorted(set(g.degrees()))})")
    return k


def spec_regular_shift(
    g: Graph,
    alpha: float,
    adjacency_spectrum: Optional[Spectrum] = None,
) -> Spectrum:
    """lambda_i(L_alpha) = a k + (a - 1) lambda_i(A) for a k-regular graph."""
    alpha = check_alpha(alpha)
    k = _require_regular(g)
    spec_a = adjacency_spectrum if adjacency_spectrum is not None else eigen_sym(adjacency_matrix(g))
    return Spectrum.from_pairs(
        [(alpha * k + (alpha - 1) * lam, mult) for lam, mult in spec_a.entries]
    )


def twin_eigenvalues(g: Graph, alpha: float) -> List[Tuple[float, int]]:
    """
    (value, lower-bound multiplicity) for every twin class of size t:
    true twins give (a(d - 1) + 1, t - 1), false twins give (a d, t - 1).
    """
    alpha = check_alpha(alpha)
    out: List[Tuple[float, int]] = []
    for twins in twin_classes(g):
        if twins.kind is TwinKind.TRUE_TWIN:
            value = alpha * (twins.degree - 1) + 1
        else:
            value = alpha * twins.degree
        out.append((value, twins.size - 1))
    return out
