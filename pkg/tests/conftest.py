import numpy as np
import pytest

from src.graphs.graph import Graph
from src.graphs.tokens import parse_graph_token
from src.linalg.matrices import SymMatrix

ALPHAS = [round(0.1 * i, 10) for i in range(11)]
OPEN_ALPHAS = ALPHAS[:-1]

SMALL_TOKENS = ["k1", "k2", "k5", "p4", "c5", "c6", "s5", "k3,2", "pine4,2", "h4,2", "kk4,1", "e3"]


def numpy_eigs(m: SymMatrix) -> np.ndarray:
    """Reference eigenvalues, descending."""
    return np.sort(np.linalg.eigvalsh(m.array))[::-1]


def assert_same_values(got, expected, tol: float = 1e-8) -> None:
    got = np.sort(np.asarray(got, dtype=float))[::-1]
    expected = np.sort(np.asarray(expected, dtype=float))[::-1]
    assert got.shape == expected.shape
    assert np.all(np.abs(got - expected) <= tol * np.maximum(1.0, np.abs(expected)))


def assert_contains(values, expected, tol: float = 1e-8) -> None:
    expected = np.asarray(expected, dtype=float)
    for v in values:
        assert np.min(np.abs(expected - v)) <= tol * max(1.0, abs(v)), f"{v} not in {expected}"


@pytest.fixture
def alphas():
    return list(ALPHAS)


@pytest.fixture
def small_graphs():
    return {token: parse_graph_token(token) for token in SMALL_TOKENS}


@pytest.fixture
def k2() -> Graph:
    return Graph.from_edges(2, [(0, 1)])
