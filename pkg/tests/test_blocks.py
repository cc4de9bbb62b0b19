import numpy as np
import pytest

from siegeldisc.blocks import (
    BlockOperator,
    BlockTangent,
    block_adjoint,
    commutator,
    complex_structure,
    compose,
    compose_tangent,
    embed,
    embed_tangent,
    from_embedded,
    inverse,
    is_gl12,
    is_o12,
    is_o12_algebra,
    is_sp,
    is_u1,
    mixed_norm,
    pattern_defect,
    sample_block_tangent,
    sample_o12,
    sample_o12_tangent,
    sample_u1,
    tangent_compose,
)
from siegeldisc.disc import sample_sp
from siegeldisc.errors import DimensionMismatch, Singular
from siegeldisc.linalg import adjoint, conj, frobenius, sample_matrix

RNG = lambda seed=0: np.random.default_rng(seed)


def random_block(rng, n):
    return BlockOperator(sample_matrix(rng, n, n), sample_matrix(rng, n, n))


def test_identity_embeds_to_identity():
    assert np.array_equal(embed(BlockOperator.identity(3)), np.eye(6))


def test_embed_block_pattern():
    a = random_block(RNG(0), 4)
    E = embed(a)
    assert np.array_equal(E[4:, :4], conj(a.h))
    assert np.array_equal(E[4:, 4:], conj(a.g))
    assert pattern_defect(E) == 0.0


def test_from_embedded_round_trip():
    a = random_block(RNG(1), 3)
    b = from_embedded(embed(a))
    assert np.array_equal(a.g, b.g) and np.array_equal(a.h, b.h)


def test_pattern_defect_detects_violation():
    E = np.zeros((4, 4), dtype=complex)
    E[2, 0] = 1.0  # lower-left without the matching conjugate upper-right
    assert pattern_defect(E) > 0.9


def test_block_operator_guards():
    with pytest.raises(DimensionMismatch):
        BlockOperator(np.eye(2), np.zeros((3, 3)))
    with pytest.raises(ValueError):
        BlockOperator(np.full((2, 2), np.nan), np.zeros((2, 2)))


def test_compose_matches_dense_oracle():
    rng = RNG(2)
    for n in (1, 2, 5):
        a, b = random_block(rng, n), random_block(rng, n)
        dense = embed(a) @ embed(b)
        assert frobenius(embed(compose(a, b)) - dense) <= 1e-13 * max(frobenius(dense), 1.0)


def test_compose_identity_and_mismatch():
    a = random_block(RNG(3), 3)
    e = BlockOperator.identity(3)
    assert frobenius(embed(compose(a, e)) - embed(a)) == 0.0
    with pytest.raises(DimensionMismatch):
        compose(a, BlockOperator.identity(4))


def test_inverse_matches_dense_oracle():
    a = random_block(RNG(4), 4)
    assert frobenius(embed(inverse(a)) - np.linalg.inv(embed(a))) <= 1e-12


def test_inverse_of_identity():
    e = BlockOperator.identity(2)
    assert frobenius(embed(inverse(e)) - np.eye(4)) == 0.0


def test_inverse_rejects_singular():
    z = np.zeros((2, 2))
    with pytest.raises(Singular):
        inverse(BlockOperator(z, z))


def test_inverse_of_orthogonal_is_adjoint():
    a = sample_o12(RNG(5), 4)
    assert frobenius(embed(inverse(a)) - embed(block_adjoint(a))) <= 1e-12


def test_adjoint_matches_dense_adjoint():
    a = random_block(RNG(6), 4)
    assert np.array_equal(embed(block_adjoint(a)), adjoint(embed(a)))


def test_complex_structure_squares_to_minus_identity():
    J = complex_structure(3)
    assert np.array_equal(J @ J, -np.eye(6))
    assert np.array_equal(adjoint(J) @ J, np.eye(6))


def test_is_sp_identity_and_scalar_hyperbolic():
    assert is_sp(BlockOperator.identity(3)).max_residual == 0.0
    t = 0.7
    a = BlockOperator(np.diag([np.cosh(t)] * 2), np.diag([np.sinh(t)] * 2))
    assert is_sp(a).passed


def test_is_sp_residual_routes_agree():
    # the embedded-form residual determines the block residuals exactly
    for seed in range(20):
        rep = is_sp(random_block(RNG(seed), 4))
        expected = np.sqrt(2.0 * (rep.residuals["gram"] ** 2 + rep.residuals["cross"] ** 2))
        assert rep.residuals["form"] == pytest.approx(expected, abs=1e-12, rel=1e-10)


def test_is_sp_fails_generic():
    assert not is_sp(random_block(RNG(7), 3))


def test_u1_is_intersection():
    u = sample_u1(RNG(8), 4)
    assert is_u1(u).passed and is_sp(u).passed and is_o12(u).passed


def test_o12_sample_not_symplectic_generically():
    a = sample_o12(RNG(9), 4)
    assert is_o12(a).passed
    assert not is_sp(a)


def test_sp_sample_not_orthogonal_generically():
    a = sample_sp(RNG(10), 4)
    assert is_sp(a).passed
    assert not is_o12(a)


def test_is_gl12_reports_diagnostics():
    rep = is_gl12(BlockOperator.identity(3))
    assert rep.passed
    assert rep.extras["sigma_min"] == pytest.approx(1.0)
    assert rep.extras["mixed_norm"] == pytest.approx(0.0)


def test_is_gl12_singular_input():
    z = np.zeros((2, 2))
    rep = is_gl12(BlockOperator(z, z))
    assert not rep.passed


def test_mixed_norm_frozen_values():
    zero = np.zeros((2, 2))
    assert mixed_norm(BlockTangent(zero, zero)) == 0.0
    assert mixed_norm(BlockTangent(np.eye(2), zero)) == pytest.approx(2.0)
    assert mixed_norm(BlockTangent(zero, np.diag([3.0, 4.0]))) == pytest.approx(5.0)
    assert mixed_norm(BlockTangent(np.diag([1.0, -2.0]), zero)) == pytest.approx(3.0)


def test_o12_algebra_membership():
    t = sample_o12_tangent(RNG(11), 4)
    assert is_o12_algebra(t).passed
    assert not is_o12_algebra(sample_block_tangent(RNG(12), 4))


def test_o12_algebra_closed_under_commutator():
    rng = RNG(13)
    s, t = sample_o12_tangent(rng, 3), sample_o12_tangent(rng, 3)
    assert is_o12_algebra(commutator(s, t), tol=1e-10).passed


def test_tangent_compose_matches_dense():
    rng = RNG(14)
    t, a = sample_block_tangent(rng, 3), random_block(rng, 3)
    dense = embed_tangent(t) @ embed(a)
    assert frobenius(embed_tangent(tangent_compose(t, a)) - dense) <= 1e-13


def test_compose_tangent_matches_dense():
    rng = RNG(15)
    a, t = random_block(rng, 3), sample_block_tangent(rng, 3)
    dense = embed(a) @ embed_tangent(t)
    assert frobenius(embed_tangent(compose_tangent(a, t)) - dense) <= 1e-13


def test_residual_report_bool_and_max():
    rep = is_sp(BlockOperator.identity(2))
    assert bool(rep) and rep.max_residual == 0.0
