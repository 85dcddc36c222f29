import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.errors import AlphaOutOfRange, InvalidVertex, NotEquitable, ParameterOutOfRange
from src.graphs.families import make_h_graph, make_kk_graph, make_named, make_pineapple
from src.graphs.tokens import parse_graph_token
from src.linalg.eigen import Spectrum, eigen_decomposition, eigen_sym, eigvals_2x2, jacobi_eigh
from src.linalg.matrices import (
    DenseMatrix,
    SymMatrix,
    a_alpha_matrix,
    adjacency_matrix,
    check_alpha,
    degree_matrix,
    kronecker,
    l_alpha_matrix,
    laplacian_matrix,
    principal_submatrix,
    signless_laplacian_matrix,
)
from src.linalg.poly import RealPoly, char_poly, coefficient_deviation, scaled_residual
from src.linalg.quotient import (
    Partition,
    coarsest_equitable_partition,
    quotient_matrix,
    quotient_spectrum,
)
from src.theorems.families import (
    h_graph_partition,
    h_graph_quotient,
    kk_graph_partition,
    kk_graph_quotient,
    pineapple_partition,
    pineapple_quotient,
)
from src.utils.sampling import random_graph
from tests.conftest import ALPHAS, assert_contains, assert_same_values, numpy_eigs


@st.composite
def symmetric_matrices(draw, max_n: int = 7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    a = draw(arrays(np.float64, (n, n), elements=st.floats(min_value=-5.0, max_value=5.0)))
    return SymMatrix.from_array(a, symmetrize=True)


# ---------- matrices ----------


def test_check_alpha():
    assert check_alpha(0) == 0.0
    assert check_alpha(1) == 1.0
    for bad in (-0.1, 1.0001, float("nan")):
        with pytest.raises(AlphaOutOfRange):
            check_alpha(bad)


@pytest.mark.parametrize("token", ["p4", "c5", "pine4,2", "k3,2"])
def test_l_alpha_named_members(token):
    g = parse_graph_token(token)
    a, d = adjacency_matrix(g).array, degree_matrix(g).array
    assert np.array_equal(l_alpha_matrix(g, 1.0).array, d)
    assert np.array_equal(l_alpha_matrix(g, 0.0).array, -a)
    assert np.allclose(2 * l_alpha_matrix(g, 0.5).array, laplacian_matrix(g).array)
    assert np.allclose(2 * a_alpha_matrix(g, 0.5).array, signless_laplacian_matrix(g).array)
    # row sums of L_alpha are (2 alpha - 1) d(v)
    assert np.allclose(l_alpha_matrix(g, 0.3).array.sum(axis=1), -0.4 * np.diag(d))


def test_sym_matrix_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymMatrix.from_array([[0.0, 1.0], [2.0, 0.0]])
    sym = SymMatrix.from_array([[0.0, 1.0], [2.0, 0.0]], symmetrize=True)
    assert sym.array[0, 1] == sym.array[1, 0] == 1.5


def test_kronecker_and_principal_submatrix():
    a = SymMatrix.from_array([[0.0, 1.0], [1.0, 0.0]])
    k = kronecker(a, a)
    assert isinstance(k, SymMatrix)
    assert k.n == 4 and k.array[0, 3] == 1.0

    m = l_alpha_matrix(make_named("path", 3), 0.5)
    sub = principal_submatrix(m, 1)
    assert np.array_equal(sub.array, np.diag([0.5, 0.5]))
    with pytest.raises(InvalidVertex):
        principal_submatrix(m, 3)


# ---------- Jacobi / Spectrum ----------


@settings(max_examples=60, deadline=None)
@given(symmetric_matrices())
def test_jacobi_matches_numpy(m):
    values, vectors = jacobi_eigh(m)
    scale = max(1.0, float(np.abs(m.array).max()))
    assert np.allclose(values, numpy_eigs(m), atol=1e-9 * scale)
    assert np.allclose(vectors.T @ vectors, np.eye(m.n), atol=1e-9)
    assert np.all(np.diff(values) <= 0)


@settings(max_examples=30, deadline=None)
@given(symmetric_matrices())
def test_decomposition_reconstructs(m):
    decomposition = eigen_decomposition(m)
    scale = max(1.0, float(np.abs(m.array).max()))
    assert np.allclose(decomposition.reconstruct(), m.array, atol=1e-9 * scale)


@pytest.mark.parametrize("token", ["k5", "c6", "pine5,3", "h4,2", "gnp7,0.5,11"])
def test_eigen_sym_on_graphs(token, alphas):
    g = parse_graph_token(token)
    for alpha in alphas:
        m = l_alpha_matrix(g, alpha)
        assert_same_values(eigen_sym(m).values(), numpy_eigs(m), 1e-9)


def test_spectrum_grouping():
    s = Spectrum.from_values([1.0, 1 + 5e-9, 1 - 5e-9, -2.0])
    assert s.entries[0][1] == 3
    assert s.order == 4 and len(s) == 4
    assert s.min_value == -2.0
    assert s.spectral_radius == 2.0
    assert s.count_near(1.0) == 3
    assert not s.contains(0.0)
    assert Spectrum.from_pairs([(3.0, 0), (2.0, 2)]).entries == ((2.0, 2),)


def test_spectrum_records_round_small_values():
    records = Spectrum.from_values([1.9, 1e-17, -1.6]).to_records()
    assert [r["value"] for r in records] == [1.9, 0.0, -1.6]


def test_k5_at_zero_spectral_radius():
    spectrum = eigen_sym(l_alpha_matrix(make_named("complete", 5), 0.0))
    assert spectrum.spectral_radius == pytest.approx(4.0)
    assert spectrum.count_near(1.0) == 4


def test_eigvals_2x2():
    assert eigvals_2x2(DenseMatrix.from_array([[2.0, 1.0], [1.0, 2.0]])) == pytest.approx([3.0, 1.0])


# ---------- polynomials ----------


def test_real_poly_basics():
    p = RealPoly.from_roots([1.0, 2.0])
    assert p.coefficients_high_first() == pytest.approx([1.0, -3.0, 2.0])
    assert p.degree == 2 and p.is_monic
    assert p(3.0) == pytest.approx(2.0)
    assert (p - p).is_zero
    assert (p * RealPoly.x()).degree == 3
    assert RealPoly.from_high_first([0.0, 0.0, 1.0]).degree == 0
    assert scaled_residual(p, 2.0) == pytest.approx(0.0, abs=1e-15)
    assert coefficient_deviation(p, p) == 0.0


def test_char_poly_examples():
    k2 = make_named("complete", 2)
    assert char_poly(l_alpha_matrix(k2, 0.5)).coefficients_high_first() == pytest.approx([1, -1, 0], abs=1e-12)
    p3 = make_named("path", 3)
    assert char_poly(l_alpha_matrix(p3, 0.0)).coefficients_high_first() == pytest.approx([1, 0, -2, 0], abs=1e-12)
    assert char_poly(SymMatrix.from_array(np.zeros((0, 0)))) == RealPoly.one()


@settings(max_examples=40, deadline=None)
@given(symmetric_matrices(max_n=6))
def test_char_poly_matches_numpy(m):
    ours = np.array(char_poly(m).coefficients_high_first())
    reference = np.poly(m.array)
    scale = np.maximum(1.0, np.abs(reference))
    assert np.all(np.abs(ours - reference) <= 1e-7 * scale.max())


# ---------- quotients ----------


def test_partition_validation():
    with pytest.raises(ParameterOutOfRange):
        Partition.from_blocks([[0, 1], [1, 2]], 3)
    with pytest.raises(ParameterOutOfRange):
        Partition.from_blocks([[0], []], 1)
    with pytest.raises(ParameterOutOfRange):
        Partition.from_blocks([[0, 1]], 3)
    assert Partition.discrete(3).sizes == [1, 1, 1]


def test_quotient_not_equitable():
    with pytest.raises(NotEquitable):
        quotient_matrix(l_alpha_matrix(make_named("path", 4), 0.3), Partition.single(4))


def test_coarsest_equitable_partition():
    assert coarsest_equitable_partition(make_named("path", 4)).blocks == ((0, 3), (1, 2))
    assert len(coarsest_equitable_partition(make_named("cycle", 5))) == 1
    assert coarsest_equitable_partition(make_pineapple(5, 3)).blocks == (
        (0, 1, 2, 3),
        (4,),
        (5, 6, 7),
    )


@pytest.mark.parametrize("p, q", [(3, 1), (4, 2), (5, 3), (6, 4)])
def test_pineapple_quotient_matches_graph(p, q):
    g = make_pineapple(p, q)
    for alpha in ALPHAS:
        exact = quotient_matrix(l_alpha_matrix(g, alpha), pineapple_partition(p, q))
        assert np.allclose(exact.array, pineapple_quotient(p, q, alpha).array, atol=1e-12)


@pytest.mark.parametrize("n, l", [(3, 1), (4, 2), (5, 3), (6, 5)])
def test_h_quotient_matches_graph(n, l):
    g = make_h_graph(n, l)
    for alpha in ALPHAS:
        exact = quotient_matrix(l_alpha_matrix(g, alpha), h_graph_partition(n, l))
        assert np.allclose(exact.array, h_graph_quotient(n, l, alpha).array, atol=1e-12)


@pytest.mark.parametrize("n, l", [(3, 1), (4, 2), (5, 5), (6, 3)])
def test_kk_quotient_matches_graph(n, l):
    g = make_kk_graph(n, l)
    for alpha in ALPHAS:
        exact = quotient_matrix(l_alpha_matrix(g, alpha), kk_graph_partition(n, l))
        assert np.allclose(exact.array, kk_graph_quotient(n, l, alpha).array, atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=8),
    seed=st.integers(min_value=0, max_value=10_000),
    alpha=st.sampled_from(ALPHAS),
)
def test_quotient_eigenvalues_are_eigenvalues(n, seed, alpha):
    g = random_graph(n, 0.5, seed)
    m = l_alpha_matrix(g, alpha)
    spectrum = quotient_spectrum(m, coarsest_equitable_partition(g))
    assert_contains(spectrum.values(), numpy_eigs(m), 1e-8)


def test_symmetric_quotient_keeps_multiplicity_bound():
    m = l_alpha_matrix(make_named("complete_bipartite", 3, 2), 0.4)
    spectrum = quotient_spectrum(m, Partition.from_blocks([[0, 1, 2], [3, 4]], 5))
    assert spectrum.order == 2
    assert_contains(spectrum.values(), numpy_eigs(m))
    assert math.isclose(sum(spectrum.values()), 0.4 * 2 + 0.4 * 3, abs_tol=1e-12)
