"""Bounded symmetric domain of symmetric contractions and its Moebius action.

The domain at truncation n consists of complex n x n matrices Z with
Z^T = Z and id - Z*Z positive definite. The block symplectic group acts by
Z |-> (g Z + h)(conj(h) Z + conj(g))^(-1); the action is transitive, with
an explicit transporter built from the off-diagonal block exponential, and
the isotropy group of 0 is the unitary subgroup (h = 0, g unitary).

Points and tangents are plain complex ndarrays; membership is checked by
report-returning predicates rather than enforced by wrapper types.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import BlockOperator, compose, sample_u1
from .errors import DenominatorSingular, Singular
from .linalg import (
    CONTRACTION_MARGIN,
    SING_TOL,
    SYM_TOL,
    adjoint,
    as_complex,
    conj,
    frobenius,
    sample_matrix,
    singular_values,
)
from .matrixfunc import argtanh_scaled, exp_offdiag

# Smallest admissible eigenvalue of id - Z*Z; anything below counts as
# boundary and is rejected.
PD_FLOOR = 1e-12


@dataclass(frozen=True)
class DiscMembership:
    """Report of the two domain conditions: symmetry and strict contraction."""

    symmetry_residual: float
    min_gram_eigenvalue: float
    sym_tol: float
    pd_floor: float

    @property
    def passed(self) -> bool:
        return (
            self.symmetry_residual <= self.sym_tol
            and self.min_gram_eigenvalue >= self.pd_floor
        )

    def __bool__(self) -> bool:
        return self.passed


def is_in_disc(
    Z: np.ndarray, sym_tol: float = SYM_TOL, pd_floor: float = PD_FLOOR
) -> DiscMembership:
    """Membership report: ||Z^T - Z||_F and the least eigenvalue of id - Z*Z."""
    Z = as_complex(Z)
    sym = frobenius(Z.T - Z)
    w = np.linalg.eigvalsh(np.eye(Z.shape[0]) - adjoint(Z) @ Z)
    return DiscMembership(sym, float(w[0]), sym_tol, pd_floor)


def _solve_right(N: np.ndarray, D: np.ndarray, sing_tol: float, err) -> np.ndarray:
    """N D^(-1) via a linear solve; raises err if D is numerically singular."""
    smin = float(singular_values(D)[-1])
    if smin < sing_tol:
        raise err(f"denominator numerically singular (smin = {smin:.3e})")
    return np.linalg.solve(D.T, N.T).T


def mobius(a: BlockOperator, Z: np.ndarray, sing_tol: float = SING_TOL) -> np.ndarray:
    """Moebius action (g Z + h)(conj(h) Z + conj(g))^(-1).

    For a in the symplectic group and Z in the domain this is again a
    domain point and the assignment is a left group action.

    Raises
    ------
    DenominatorSingular
        If conj(h) Z + conj(g) is numerically singular, which signals an
        input outside the group x domain or breakdown at the boundary.
    """
    Z = as_complex(Z)
    num = a.g @ Z + a.h
    den = conj(a.h) @ Z + conj(a.g)
    return _solve_right(num, den, sing_tol, DenominatorSingular)


def transporter(Z: np.ndarray, margin: float = CONTRACTION_MARGIN) -> BlockOperator:
    """Symplectic element mapping 0 to Z.

    Exponentiates the off-diagonal block A_Z = Z artanh(|Z|)/|Z|; the
    scaling is what makes the hyperbolic tangent of the exponential's
    polar part reproduce Z exactly.
    """
    return exp_offdiag(argtanh_scaled(as_complex(Z), margin=margin))


def coset_rep(a: BlockOperator, sing_tol: float = SING_TOL) -> np.ndarray:
    """The domain point h conj(g)^(-1) represented by the group element.

    Equals mobius(a, 0) and is invariant under right multiplication by
    isotropy elements, so it identifies the coset space with the domain.

    Raises
    ------
    Singular
        If conj(g) is numerically singular (impossible for genuine group
        members, whose g satisfies g*g = id + h^T conj(h) >= id).
    """
    return _solve_right(a.h, conj(a.g), sing_tol, Singular)


def pushforward_at_zero(
    a: BlockOperator, U: np.ndarray, sing_tol: float = SING_TOL
) -> np.ndarray:
    """Differential of the Moebius action at 0: U |-> (g*)^(-1) U conj(g)^(-1).

    The result is again symmetric. Equivalent closed forms are
    (id - Z conj(Z)) g U conj(g)^(-1) with Z = coset_rep(a), used by the
    reduced-form tests.
    """
    U = as_complex(U)
    gs = adjoint(a.g)
    smin = float(singular_values(gs)[-1])
    if smin < sing_tol:
        raise Singular(f"diagonal block numerically singular (smin = {smin:.3e})")
    X = np.linalg.solve(gs, U)
    return _solve_right(X, conj(a.g), sing_tol, Singular)


def mobius_differential(
    a: BlockOperator, Z: np.ndarray, U: np.ndarray, sing_tol: float = SING_TOL
) -> np.ndarray:
    """Differential of the Moebius action at Z in direction U.

    Computes (g - Z' conj(h)) U (conj(h) Z + conj(g))^(-1) with
    Z' = mobius(a, Z). Derived by differentiating the action along
    t |-> Z + t U; validated against central finite differences.
    """
    Z = as_complex(Z)
    U = as_complex(U)
    Zp = mobius(a, Z, sing_tol)
    den = conj(a.h) @ Z + conj(a.g)
    return _solve_right((a.g - Zp @ conj(a.h)) @ U, den, sing_tol, DenominatorSingular)


def sample_point(
    rng: np.random.Generator, n: int, margin: float = CONTRACTION_MARGIN
) -> np.ndarray:
    """Random domain point: symmetric with operator norm <= 1 - margin."""
    return sample_matrix(rng, n, n, "contraction_symmetric", margin=margin)


def sample_tangent(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random tangent: plain-transpose symmetric, no norm constraint."""
    return sample_matrix(rng, n, n, "symmetric_T")


def sample_sp(
    rng: np.random.Generator, n: int, margin: float = CONTRACTION_MARGIN
) -> BlockOperator:
    """Random symplectic element as transporter(Z) composed with an isotropy element.

    Every group element factors this way (polar-type decomposition), so
    the sampler reaches the whole group; margin bounds how far the
    transporter part moves 0.
    """
    return compose(transporter(sample_point(rng, n, margin), margin), sample_u1(rng, n))
