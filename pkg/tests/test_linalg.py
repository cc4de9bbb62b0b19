import numpy as np
import pytest

from siegeldisc.errors import NotHermitian
from siegeldisc.linalg import (
    adjoint,
    as_complex,
    conj,
    frobenius,
    hermitian_eig,
    opnorm,
    sample_matrix,
    sample_unitary,
    schatten_norm,
    singular_values,
    transpose,
)

RNG = lambda seed=0: np.random.default_rng(seed)


def test_conj_is_entrywise():
    assert conj(np.array([[1j]]))[0, 0] == -1j
    assert np.array_equal(conj(np.eye(3)), np.eye(3))


def test_conj_involution():
    M = sample_matrix(RNG(1), 5, 5)
    assert np.array_equal(conj(conj(M)), M)


def test_transpose_is_plain():
    M = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert np.array_equal(transpose(M), np.array([[0.0, 0.0], [1.0, 0.0]]))


def test_transpose_composition_identities():
    M = sample_matrix(RNG(2), 4, 6)
    assert np.array_equal(transpose(transpose(M)), M)
    assert np.array_equal(adjoint(M), conj(transpose(M)))
    assert np.array_equal(transpose(M), adjoint(conj(M)))


def test_transpose_fixes_symmetric():
    Z = sample_matrix(RNG(3), 5, 5, "symmetric_T")
    assert np.array_equal(transpose(Z), Z)


def test_as_complex_rejects_non_matrix():
    with pytest.raises(ValueError):
        as_complex(np.zeros(3))


def test_schatten_norm_diagonal_values():
    D = np.diag([3.0, 4.0])
    assert schatten_norm(D, 1) == pytest.approx(7.0)
    assert schatten_norm(D, 2) == pytest.approx(5.0)
    assert schatten_norm(D, "op") == pytest.approx(4.0)


def test_schatten_norm_zero():
    Z = np.zeros((3, 3))
    for p in (1, 2, "op"):
        assert schatten_norm(Z, p) == 0.0


def test_schatten_norm_bad_index():
    with pytest.raises(ValueError):
        schatten_norm(np.eye(2), 3)


def test_schatten_ordering():
    for seed in range(200):
        M = sample_matrix(RNG(seed), 4, 4)
        assert schatten_norm(M, "op") <= schatten_norm(M, 2) + 1e-12
        assert schatten_norm(M, 2) <= schatten_norm(M, 1) + 1e-12


def test_singular_values_match_svd_oracle():
    M = sample_matrix(RNG(4), 6, 6)
    expected = np.linalg.svd(M, compute_uv=False)
    np.testing.assert_allclose(singular_values(M), expected, atol=1e-12)
    assert opnorm(M) == pytest.approx(expected[0])


def test_hermitian_eig_identity():
    eig = hermitian_eig(np.eye(4))
    np.testing.assert_allclose(eig.eigenvalues, np.ones(4))


def test_hermitian_eig_diagonal_sorted():
    eig = hermitian_eig(np.diag([1.0, -2.0]))
    np.testing.assert_allclose(eig.eigenvalues, [-2.0, 1.0])


def test_hermitian_eig_reconstruction():
    for n in (2, 8, 64):
        H = sample_matrix(RNG(n), n, n, "hermitian")
        eig = hermitian_eig(H)
        assert frobenius(eig.reconstruct() - H) <= 1e-12 * max(frobenius(H), 1.0)
        Q = eig.eigenvectors
        assert frobenius(adjoint(Q) @ Q - np.eye(n)) <= 1e-12 * n


def test_hermitian_eig_apply_matches_expm_oracle():
    from scipy.linalg import expm

    H = sample_matrix(RNG(7), 6, 6, "hermitian")
    np.testing.assert_allclose(hermitian_eig(H).apply(np.exp), expm(H), atol=1e-12)


def test_hermitian_eig_rejects_general_matrix():
    with pytest.raises(NotHermitian):
        hermitian_eig(sample_matrix(RNG(8), 4, 4))


def test_sample_structured_kinds():
    rng = RNG(9)
    H = sample_matrix(rng, 5, 5, "hermitian")
    assert frobenius(H - adjoint(H)) == 0.0
    A = sample_matrix(rng, 5, 5, "anti_hermitian")
    assert frobenius(A + adjoint(A)) == 0.0
    S = sample_matrix(rng, 5, 5, "symmetric_T")
    assert frobenius(S - S.T) == 0.0


def test_sample_contraction_symmetric():
    for seed in range(20):
        Z = sample_matrix(RNG(seed), 6, 6, "contraction_symmetric", margin=0.05)
        assert frobenius(Z - Z.T) == 0.0
        assert opnorm(Z) <= 0.95 + 1e-12


def test_sample_matrix_determinism():
    a = sample_matrix(RNG(42), 3, 3)
    b = sample_matrix(RNG(42), 3, 3)
    assert np.array_equal(a, b)


def test_sample_matrix_guards():
    with pytest.raises(ValueError):
        sample_matrix(RNG(0), 3, 3, "nope")
    with pytest.raises(ValueError):
        sample_matrix(RNG(0), 3, 4, "hermitian")


def test_sample_unitary():
    u = sample_unitary(RNG(10), 7)
    assert frobenius(adjoint(u) @ u - np.eye(7)) <= 1e-13
