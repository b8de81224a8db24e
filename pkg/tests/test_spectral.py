import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from starwalk.closedform import (
    complete_orthonormal_basis,
    complete_raw_eigenstates,
    star_orthogonal_states,
    star_orthonormal_basis,
    star_raw_eigenstates,
)
from starwalk.graph import laplacian, make_complete, make_star
from starwalk.spectral import (
    ConvergenceError,
    DependentVectorsError,
    SpectralDecomposition,
    classical_gram_schmidt,
    eigendecompose,
    gram_schmidt,
    group_eigenspaces,
    jacobi_eigh,
)


def assert_decomposition_invariants(d, m):
    q = d.eigenvectors
    n = d.n
    assert np.all(np.diff(d.eigenvalues) >= 0)
    assert np.abs(q.T @ q - np.eye(n)).max() < 1e-12
    assert np.abs(m @ q - q * d.eigenvalues).max() < 1e-9
    assert np.abs(q @ q.T - np.eye(n)).max() < 1e-10


def same_up_to_sign(a, b, tol):
    return min(np.abs(a - b).max(), np.abs(a + b).max()) < tol


@st.composite
def symmetric_matrices(draw, max_n=64):
    n = draw(st.integers(1, max_n))
    x = draw(
        arrays(np.float64, (n, n), elements=st.floats(-10, 10, allow_nan=False, width=64))
    )
    return (x + x.T) / 2


# ---- eigendecompose ---------------------------------------------------------


def test_star5_spectrum():
    d = eigendecompose(laplacian(make_star(5)))
    np.testing.assert_allclose(d.eigenvalues, [0, 1, 1, 1, 5], atol=1e-12)


def test_complete4_spectrum():
    d = eigendecompose(laplacian(make_complete(4)))
    np.testing.assert_allclose(d.eigenvalues, [0, 4, 4, 4], atol=1e-12)


def test_identity_spectrum():
    d = eigendecompose(np.eye(3))
    np.testing.assert_array_equal(d.eigenvalues, [1, 1, 1])
    assert_decomposition_invariants(d, np.eye(3))


@pytest.mark.parametrize("n", [2, 3, 8, 31, 64])
@pytest.mark.parametrize("factory", [make_star, make_complete])
def test_family_invariants(factory, n):
    m = laplacian(factory(n))
    assert_decomposition_invariants(eigendecompose(m), m)


def test_sign_convention():
    d = eigendecompose(laplacian(make_star(7)))
    q = d.eigenvectors
    for i in range(d.n):
        col = q[:, i]
        assert col[np.argmax(np.abs(col))] > 0


@settings(max_examples=40, deadline=None)
@given(symmetric_matrices())
def test_round_trip_random(m):
    d = eigendecompose(m)
    assert np.abs(d.reconstruct() - m).max() < 1e-9
    assert_decomposition_invariants(d, m)


def test_matches_lapack():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(40, 40))
    x = x + x.T
    np.testing.assert_allclose(eigendecompose(x).eigenvalues, np.linalg.eigvalsh(x), atol=1e-11)


def test_rejects_asymmetric():
    with pytest.raises(ValueError):
        eigendecompose(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_convergence_error_reports_residual():
    m = laplacian(make_star(16))
    with pytest.raises(ConvergenceError) as info:
        jacobi_eigh(m, max_sweeps=1)
    assert info.value.residual > 0
    assert info.value.sweeps == 1


def test_decomposition_is_read_only():
    d = eigendecompose(np.eye(2))
    with pytest.raises(ValueError):
        d.eigenvalues[0] = 3.0


# ---- Gram-Schmidt -----------------------------------------------------------


def test_star3_first_vector():
    # v_1 = |3> - |2>  ->  sqrt(1/2)|3> - sqrt(1/2)|2>
    q = gram_schmidt([[0.0, -1.0, 1.0]])
    np.testing.assert_allclose(q[0], [0, -np.sqrt(0.5), np.sqrt(0.5)], atol=1e-15)


def test_star5_degenerate_block():
    raw = [[0, -1, 1, 0, 0], [0, -1, 0, 1, 0], [0, -1, 0, 0, 1]]
    # coefficients sqrt(i/(i+1)) on |i+2> and -sqrt(1/(i(i+1))) on |2>..|i+1>
    expected = np.zeros((3, 5))
    for i in (1, 2, 3):
        expected[i - 1, i + 1] = np.sqrt(i / (i + 1))
        expected[i - 1, 1 : i + 1] = -np.sqrt(1 / (i * (i + 1)))
    q = gram_schmidt(raw)
    for a, b in zip(q, expected):
        assert same_up_to_sign(a, b, 1e-12)


def test_orthonormal_input_is_fixed_point():
    rng = np.random.default_rng(1)
    basis, _ = np.linalg.qr(rng.normal(size=(6, 6)))
    q = gram_schmidt(basis.T)
    for a, b in zip(q, basis.T):
        assert same_up_to_sign(a, b, 1e-12)


@pytest.mark.parametrize("n", range(3, 33))
def test_star_basis_reproduced(n):
    q = gram_schmidt(star_raw_eigenstates(n))
    expected = star_orthonormal_basis(n)
    for a, b in zip(q, expected):
        assert same_up_to_sign(a, b, 1e-12)


@pytest.mark.parametrize("n", range(2, 33))
def test_complete_basis_reproduced(n):
    q = gram_schmidt(complete_raw_eigenstates(n))
    for a, b in zip(q, complete_orthonormal_basis(n)):
        assert same_up_to_sign(a, b, 1e-12)


@pytest.mark.parametrize("n", range(3, 33))
def test_classical_matches_modified(n):
    raw = star_raw_eigenstates(n)
    _, classical = classical_gram_schmidt(raw)
    assert np.abs(classical - gram_schmidt(raw)).max() < 1e-10
    _, classical = classical_gram_schmidt(complete_raw_eigenstates(n))
    assert np.abs(classical - gram_schmidt(complete_raw_eigenstates(n))).max() < 1e-10


@pytest.mark.parametrize("n", range(3, 20))
def test_intermediate_vectors(n):
    # |i+2> - (1/i) sum_{j=2}^{i+1} |j> before normalization
    ortho, _ = classical_gram_schmidt(star_raw_eigenstates(n))
    for i in range(1, n - 1):
        expected = np.zeros(n)
        expected[i + 1] = 1
        expected[1 : i + 1] = -1 / i
        np.testing.assert_allclose(ortho[i - 1], expected, atol=1e-13)
    np.testing.assert_allclose(ortho, star_orthogonal_states(n), atol=1e-13)


def test_first_output_parallel_to_first_input():
    rng = np.random.default_rng(5)
    x = rng.normal(size=(4, 7))
    q = gram_schmidt(x)
    np.testing.assert_allclose(q[0], x[0] / np.linalg.norm(x[0]), atol=1e-15)


@settings(max_examples=50, deadline=None)
@given(
    arrays(np.float64, st.tuples(st.integers(1, 8), st.just(8)), elements=st.floats(-5, 5, width=64))
)
def test_gram_schmidt_properties(x):
    try:
        q = gram_schmidt(x)
    except DependentVectorsError:
        return
    if np.linalg.cond(x) > 1e6:
        return  # ill-conditioned input: orthogonality degrades with conditioning
    m = x.shape[0]
    assert np.abs(q @ q.T - np.eye(m)).max() < 1e-12
    # same span: every input is reproduced by its projection on the outputs
    assert np.abs(x - (x @ q.T) @ q).max() < 1e-10 * max(1.0, np.abs(x).max())


def test_dependent_input_reports_index():
    with pytest.raises(DependentVectorsError) as info:
        gram_schmidt([[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    assert info.value.index == 2
    with pytest.raises(DependentVectorsError) as info:
        classical_gram_schmidt([[1, 1], [2, 2]])
    assert info.value.index == 1


# ---- eigenspace grouping ----------------------------------------------------


def test_group_star5():
    d = eigendecompose(laplacian(make_star(5)))
    p = group_eigenspaces(d, 1e-8)
    assert p.multiplicities == [1, 3, 1]
    assert p.groups == ((0,), (1, 2, 3), (4,))


def test_group_complete6():
    d = eigendecompose(laplacian(make_complete(6)))
    assert group_eigenspaces(d, 1e-8).multiplicities == [1, 5]


def test_group_distinct():
    assert group_eigenspaces([0.0, 1.0, 2.5, 7.0]).multiplicities == [1, 1, 1, 1]


def test_group_tie_at_tolerance_splits():
    assert group_eigenspaces([0.0, 0.5], tol=0.5).multiplicities == [1, 1]
    assert group_eigenspaces([0.0, 0.4999], tol=0.5).multiplicities == [2]


@settings(max_examples=100)
@given(
    st.lists(st.floats(-50, 50, allow_nan=False), min_size=1, max_size=30),
    st.sampled_from([1e-8, 1e-3, 0.5]),
)
def test_group_partition_properties(vals, tol):
    vals = sorted(vals)
    p = group_eigenspaces(vals, tol)
    flat = [i for g in p.groups for i in g]
    assert flat == list(range(len(vals)))
    for g in p.groups:
        assert all(vals[b] - vals[a] < tol for a, b in zip(g, g[1:]))
    for g, h in zip(p.groups, p.groups[1:]):
        assert vals[h[0]] - vals[g[-1]] >= tol
    # idempotent: regrouping representatives gives one group per representative
    again = group_eigenspaces(list(p.representatives), tol)
    assert again.multiplicities == [1] * len(p.groups)


def test_group_rejects_unsorted():
    with pytest.raises(ValueError):
        group_eigenspaces([1.0, 0.0])


def test_decomposition_shape_check():
    with pytest.raises(ValueError):
        SpectralDecomposition(np.zeros(2), np.eye(3))
