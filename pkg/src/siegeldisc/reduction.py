"""Flat Kaehler structure, momentum map, and the reduced two-form.

The ambient space is the affine space of block operators M (identity plus a
block perturbation) with the flat metric Tr V1* V2, complex structure
V |-> J V, and two-form Tr V1* J V2. Right multiplication by the orthogonal
block group is Hamiltonian up to a computable, base-point-independent
defect; the zero level set of the momentum map is exactly the symplectic
block group, and the quotient of that level set by the isotropy group
carries the closed-form two-form omega_Q on the disc.

Momentum values are represented by their coefficient matrix S (embedded
2n x 2n, anti-Hermitian); the functional itself is pair(S, A) =
-1/2 Re Tr(S A). Two independent evaluation routes for omega_Q are kept
side by side so tests can compare them without sharing code.
"""

from __future__ import annotations

import numpy as np

from .blocks import (
    BlockOperator,
    BlockTangent,
    complex_structure,
    compose,
    embed,
    embed_tangent,
)
from .disc import mobius, mobius_differential
from .linalg import adjoint, as_complex, conj, sample_matrix


def kahler_metric(V1: BlockTangent, V2: BlockTangent) -> float:
    """Flat metric Tr(V1* V2) on embedded tangents; real for block tangents."""
    return float(np.vdot(embed_tangent(V1), embed_tangent(V2)).real)


def kahler_J(V: BlockTangent) -> BlockTangent:
    """The compatible complex structure: multiply by diag(i, -i) blockwise."""
    return BlockTangent(1j * V.a1, 1j * V.a2)


def kahler_omega(V1: BlockTangent, V2: BlockTangent) -> float:
    """Flat two-form Tr(V1* J V2) = metric(V1, J V2); antisymmetric and real."""
    return kahler_metric(V1, kahler_J(V2))


def momentum(M: BlockOperator) -> np.ndarray:
    """Momentum coefficient S = M* J M - J (embedded, anti-Hermitian).

    The momentum value on a generator A is pair(S, A); S vanishes exactly
    on the symplectic block group.
    """
    E = embed(M)
    J = complex_structure(M.n)
    return adjoint(E) @ J @ E - J


def pair(S: np.ndarray, A: BlockTangent) -> float:
    """The duality pairing -1/2 Re Tr(S A).

    The trace is provably real for anti-Hermitian S and block-pattern A;
    taking the real part discards round-off only, and suites assert the
    imaginary part separately instead of trusting this silently.
    """
    return float(-0.5 * np.trace(as_complex(S) @ embed_tangent(A)).real)


def pair_imag(S: np.ndarray, A: BlockTangent) -> float:
    """Imaginary part discarded by :func:`pair`; a round-off diagnostic."""
    return float(np.trace(as_complex(S) @ embed_tangent(A)).imag)


def momentum_differential(M: BlockOperator, V: BlockTangent) -> np.ndarray:
    """Coefficient of the momentum differential: V* J M + M* J V.

    Satisfies the Hamiltonian identity
    pair(momentum_differential(M, V), A) = kahler_omega(M A, V), where the
    generator field M A is compose_tangent(M, A).
    """
    EM, EV = embed(M), embed_tangent(V)
    J = complex_structure(M.n)
    return adjoint(EV) @ J @ EM + adjoint(EM) @ J @ EV


def adstar(a: BlockOperator, S: np.ndarray) -> np.ndarray:
    """Coadjoint transport of a coefficient: S |-> a^(-1) S a.

    Trace cyclicity turns the defining pullback A |-> a A a^(-1) on
    generators into this conjugation of the coefficient matrix.
    """
    E = embed(a)
    return np.linalg.solve(E, as_complex(S) @ E)


def equivariance_defect(
    M: BlockOperator, a: BlockOperator, A: BlockTangent
) -> tuple[float, float]:
    """Both sides of the non-equivariance identity for the orthogonal action.

    Returns (lhs, rhs) with
    lhs = pair(momentum(M a), A) - pair(adstar(a, momentum(M)), A) and
    rhs = -1/2 Re Tr((a^(-1) J a - J) A). The two agree up to round-off and
    neither depends on M; the defect vanishes when a is an isotropy element
    (h = 0, g unitary), which commutes with J.
    """
    lhs = pair(momentum(compose(M, a)), A) - pair(adstar(a, momentum(M)), A)
    E = embed(a)
    J = complex_structure(a.n)
    rhs = pair(np.linalg.solve(E, J @ E) - J, A)
    return lhs, rhs


def omega_Q(Z: np.ndarray, U: np.ndarray, V: np.ndarray) -> float:
    """Reduced two-form 2 Im Tr((id - conj(Z) Z)^(-1) U* (id - Z conj(Z))^(-1) V).

    Z is a domain point and U, V are symmetric tangents at Z. At Z = 0 this
    is 2 Im Tr(U* V). The value is invariant under the symplectic action
    when tangents are moved by the action's differential.
    """
    Z, U, V = as_complex(Z), as_complex(U), as_complex(V)
    eye = np.eye(Z.shape[0])
    X = np.linalg.solve(eye - conj(Z) @ Z, adjoint(U))
    Y = np.linalg.solve(eye - Z @ conj(Z), V)
    return float(2.0 * np.trace(X @ Y).imag)


def omega_Q_alt(Z: np.ndarray, U: np.ndarray, V: np.ndarray) -> float:
    """Alternative route: -2 Im Tr((id - Z conj(Z))^(-1) U (id - conj(Z) Z)^(-1) conj(V)).

    Agrees with :func:`omega_Q` whenever Z, U, V are symmetric; evaluated
    independently so the two routes can cross-check each other.
    """
    Z, U, V = as_complex(Z), as_complex(U), as_complex(V)
    eye = np.eye(Z.shape[0])
    X = np.linalg.solve(eye - Z @ conj(Z), U)
    Y = np.linalg.solve(eye - conj(Z) @ Z, conj(V))
    return float(-2.0 * np.trace(X @ Y).imag)


def omega_Q_invariance_residual(
    a: BlockOperator, Z: np.ndarray, U: np.ndarray, V: np.ndarray
) -> float:
    """|omega_Q at the moved data minus omega_Q at the original data|."""
    Zp = mobius(a, Z)
    Up = mobius_differential(a, Z, U)
    Vp = mobius_differential(a, Z, V)
    return abs(omega_Q(Zp, Up, Vp) - omega_Q(Z, U, V))


def o12_algebra_basis(n: int) -> list[BlockTangent]:
    """Canonical real basis of the orthogonal block Lie algebra.

    Diagonal block anti-Hermitian (n^2 real dimensions), off-diagonal block
    antisymmetric (n(n-1) real dimensions); enumeration order is
    deterministic: diagonal imaginary units, then real/imaginary pair
    rotations, then off-diagonal real/imaginary antisymmetric units.
    """
    zero = np.zeros((n, n), dtype=np.complex128)
    basis: list[BlockTangent] = []
    for k in range(n):
        a1 = zero.copy()
        a1[k, k] = 1j
        basis.append(BlockTangent(a1, zero))
    for k in range(n):
        for m in range(k + 1, n):
            a1 = zero.copy()
            a1[k, m] = 1.0
            a1[m, k] = -1.0
            basis.append(BlockTangent(a1, zero))
            a1 = zero.copy()
            a1[k, m] = 1j
            a1[m, k] = 1j
            basis.append(BlockTangent(a1, zero))
    for k in range(n):
        for m in range(k + 1, n):
            a2 = zero.copy()
            a2[k, m] = 1.0
            a2[m, k] = -1.0
            basis.append(BlockTangent(zero, a2))
            a2 = zero.copy()
            a2[k, m] = 1j
            a2[m, k] = -1j
            basis.append(BlockTangent(zero, a2))
    return basis


def momentum_level_residual(M: BlockOperator, basis: list[BlockTangent]) -> float:
    """max |pair(momentum(M), A)| over the supplied generator basis."""
    S = momentum(M)
    return max(abs(pair(S, A)) for A in basis)


def sample_flat(
    rng: np.random.Generator, n: int, spread: float = 1.0
) -> BlockOperator:
    """Random ambient point: identity plus a Gaussian block perturbation."""
    return BlockOperator(
        np.eye(n) + spread * sample_matrix(rng, n, n, "general"),
        spread * sample_matrix(rng, n, n, "general"),
    )
