import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from siegeldisc.blocks import embed, is_sp
from siegeldisc.errors import NotSymmetric, SpectrumAtOne
from siegeldisc.linalg import adjoint, conj, frobenius, hermitian_eig, sample_matrix
from siegeldisc.matrixfunc import (
    ARGTANH_OVER_X,
    SINCH,
    TANH_OVER_X,
    abs_op,
    argtanh_scaled,
    argtanh_series,
    cosh_abs,
    exp_offdiag,
    sinch_abs,
    tanh_scaled,
)

RNG = lambda seed=0: np.random.default_rng(seed)


def offdiag_embedding(A):
    """Test-side exponent [[0, A], [A*, 0]]; equals the block pattern when A^T = A."""
    n = A.shape[0]
    X = np.zeros((2 * n, 2 * n), dtype=complex)
    X[:n, n:] = A
    X[n:, :n] = adjoint(A)
    return X


def test_scalar_rules_at_zero():
    assert SINCH(np.array([0.0]))[0] == 1.0
    assert ARGTANH_OVER_X(np.array([0.0]))[0] == 1.0
    assert TANH_OVER_X(np.array([0.0]))[0] == 1.0


def test_scalar_rules_branch_continuity():
    # values straddling the cutoff agree to full precision
    for f in (SINCH, ARGTANH_OVER_X, TANH_OVER_X):
        below, above = f(np.array([9.9e-9]))[0], f(np.array([1.1e-8]))[0]
        assert below == pytest.approx(1.0, abs=1e-12)
        assert above == pytest.approx(below, abs=1e-12)


def test_scalar_rules_no_warning_at_zero():
    with np.errstate(all="raise"):
        SINCH(np.array([0.0, 1.0]))
        ARGTANH_OVER_X(np.array([0.0, 0.5]))


def test_abs_op_trivial_and_diagonal():
    assert frobenius(abs_op(np.zeros((3, 3)))) == 0.0
    np.testing.assert_allclose(abs_op(np.diag([-2.0, 3.0])), np.diag([2.0, 3.0]), atol=1e-13)


def test_abs_op_defining_property():
    for seed in range(10):
        A = sample_matrix(RNG(seed), 5, 5)
        P = abs_op(A)
        assert frobenius(P @ P - adjoint(A) @ A) <= 1e-11
        assert frobenius(P - adjoint(P)) <= 1e-12
        assert np.min(np.linalg.eigvalsh(P)) >= -1e-12


def test_sinch_abs_trivial_and_scalar():
    assert frobenius(sinch_abs(np.zeros((2, 2)))) == 0.0
    t = 0.83
    assert sinch_abs(np.array([[t]]))[0, 0] == pytest.approx(np.sinh(t))


def test_sinch_abs_matches_expm_oracle_general():
    # upper-right block of the generic exponential, no symmetry assumed
    A = sample_matrix(RNG(1), 4, 4)
    E = expm(offdiag_embedding(A))
    np.testing.assert_allclose(sinch_abs(A), E[:4, 4:], atol=1e-12)


def test_cosh_abs_trivial_and_scalar():
    np.testing.assert_allclose(cosh_abs(np.zeros((3, 3))), np.eye(3), atol=1e-14)
    t = 1.2
    assert cosh_abs(np.array([[t]]))[0, 0] == pytest.approx(np.cosh(t))


def test_cosh_abs_eigenvalues_at_least_one():
    A = sample_matrix(RNG(2), 5, 5)
    assert np.min(np.linalg.eigvalsh(cosh_abs(A))) >= 1.0 - 1e-12


def test_spectral_outputs_commute_with_abs():
    A = sample_matrix(RNG(3), 5, 5)
    P = abs_op(A)
    C = cosh_abs(A)
    assert frobenius(C @ P - P @ C) <= 1e-11


def test_exp_offdiag_zero_is_identity():
    a = exp_offdiag(np.zeros((3, 3)))
    assert frobenius(a.g - np.eye(3)) <= 1e-14
    assert frobenius(a.h) == 0.0


def test_exp_offdiag_matches_expm_oracle():
    for seed in range(50):
        n = 2 + seed % 7
        A = sample_matrix(RNG(seed), n, n, "symmetric_T")
        assert frobenius(embed(exp_offdiag(A)) - expm(offdiag_embedding(A))) <= 1e-10


def test_exp_offdiag_lands_in_sp():
    A = sample_matrix(RNG(5), 6, 6, "symmetric_T")
    assert is_sp(exp_offdiag(A), tol=1e-10).passed


def test_exp_offdiag_diagonal_block_orientation():
    # the diagonal blocks are cosh((A A*)^(1/2)) and cosh((A* A)^(1/2));
    # using cosh((A* A)^(1/2)) on top fails against the generic exponential
    A = sample_matrix(RNG(6), 5, 5, "symmetric_T")
    E = expm(offdiag_embedding(A))
    assert frobenius(exp_offdiag(A).g - E[:5, :5]) <= 1e-12
    wrong = cosh_abs(A)
    assert frobenius(wrong - E[:5, :5]) > 1e-3


def test_exp_offdiag_rejects_nonsymmetric():
    with pytest.raises(NotSymmetric):
        exp_offdiag(sample_matrix(RNG(7), 3, 3))


def test_argtanh_scaled_trivial_and_scalar():
    assert frobenius(argtanh_scaled(np.zeros((2, 2)))) == 0.0
    r = 0.4
    assert argtanh_scaled(np.array([[r]]))[0, 0] == pytest.approx(np.arctanh(r))


def test_argtanh_scaled_abs_identity():
    # |A_Z| = artanh(|Z|) as spectral functions
    Z = sample_matrix(RNG(8), 5, 5, "contraction_symmetric")
    expected = hermitian_eig(abs_op(Z)).apply(np.arctanh)
    assert frobenius(abs_op(argtanh_scaled(Z)) - expected) <= 1e-11


def test_argtanh_scaled_preserves_symmetry():
    Z = sample_matrix(RNG(9), 6, 6, "contraction_symmetric")
    A = argtanh_scaled(Z)
    assert frobenius(A.T - A) <= 1e-12


def test_argtanh_scaled_rejects_near_boundary():
    with pytest.raises(SpectrumAtOne):
        argtanh_scaled(0.97 * np.eye(3), margin=0.05)


def test_argtanh_scaled_allows_exact_margin():
    argtanh_scaled(0.95 * np.eye(3), margin=0.05)


def test_argtanh_series_cross_check():
    # the truncated odd series is an independent oracle below norm 0.5
    rng = RNG(10)
    for _ in range(10):
        Z = 0.5 * sample_matrix(rng, 4, 4, "contraction_symmetric", margin=0.0)
        assert frobenius(argtanh_scaled(Z, margin=0.0) - argtanh_series(Z)) <= 1e-12


def test_tanh_inverts_argtanh():
    for seed in range(20):
        Z = sample_matrix(RNG(seed), 5, 5, "contraction_symmetric")
        assert frobenius(tanh_scaled(argtanh_scaled(Z)) - Z) <= 1e-9


@settings(max_examples=25, deadline=None)
@given(n=st.integers(min_value=1, max_value=8), seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_exp_offdiag_agrees_with_expm_property(n, seed):
    A = sample_matrix(np.random.default_rng(seed), n, n, "symmetric_T")
    assert frobenius(embed(exp_offdiag(A)) - expm(offdiag_embedding(A))) <= 1e-10


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_round_trip_property(seed):
    Z = sample_matrix(np.random.default_rng(seed), 4, 4, "contraction_symmetric")
    assert frobenius(tanh_scaled(argtanh_scaled(Z)) - Z) <= 1e-9


def test_conjugate_block_consistency():
    # for symmetric A the lower blocks of the closed form are the
    # conjugates of the upper ones, matching the generic exponential
    A = sample_matrix(RNG(11), 4, 4, "symmetric_T")
    E = expm(offdiag_embedding(A))
    a = exp_offdiag(A)
    assert frobenius(conj(a.h) - E[4:, :4]) <= 1e-12
    assert frobenius(conj(a.g) - E[4:, 4:]) <= 1e-12
