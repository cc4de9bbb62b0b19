"""Block operators [[g, h], [conj(h), conj(g)]] and group membership checks.

Operators of this block shape are exactly the complex-linear extensions of
real operators on the underlying real Hilbert space, written in the basis
that diagonalizes the compatible complex structure J = diag(i*id, -i*id).
Membership in each group (symplectic, orthogonal, unitary isotropy) is
reported as a residual record rather than a bare boolean so verification
suites can log worst-case residuals.

At finite truncation the Schatten-class conditions distinguishing the
restricted and (1,2)-mixed symplectic groups hold automatically, so the
predicates coincide; the mixed (trace, Hilbert-Schmidt) norm is still
reported as a diagnostic, and the truncation-convergence probe in
:mod:`siegeldisc.suites` illustrates where the distinction would bite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DimensionMismatch, Singular
from .linalg import (
    COND_MAX,
    SING_TOL,
    adjoint,
    as_complex,
    conj,
    frobenius,
    sample_matrix,
    sample_unitary,
    schatten_norm,
    singular_values,
)

PASS_TOL = 1e-9


@dataclass(frozen=True)
class ResidualReport:
    """Named residuals of a membership predicate; passes iff all <= tol.

    The extras mapping carries diagnostics (mixed norms, smallest singular
    values) that do not enter the pass decision.
    """

    name: str
    residuals: Mapping[str, float]
    tol: float
    extras: Mapping[str, float] | None = None

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class BlockOperator:
    """The operator [[g, h], [conj(h), conj(g)]] on C^n (+) C^n."""

    g: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        g = as_complex(self.g)
        h = as_complex(self.h)
        if g.shape != h.shape or g.shape[0] != g.shape[1]:
            raise DimensionMismatch(
                f"blocks must be square and equal-sized, got {g.shape} and {h.shape}"
            )
        if not (np.all(np.isfinite(g.view(np.float64))) and np.all(np.isfinite(h.view(np.float64)))):
            raise ValueError("block entries must be finite")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)

    @property
    def n(self) -> int:
        return self.g.shape[0]

    @classmethod
    def identity(cls, n: int) -> "BlockOperator":
        return cls(np.eye(n, dtype=np.complex128), np.zeros((n, n), dtype=np.complex128))


@dataclass(frozen=True)
class BlockTangent:
    """The tangent [[a1, a2], [conj(a2), conj(a1)]]; a1 on the diagonal block."""

    a1: np.ndarray
    a2: np.ndarray

    def __post_init__(self):
        a1 = as_complex(self.a1)
        a2 = as_complex(self.a2)
        if a1.shape != a2.shape or a1.shape[0] != a1.shape[1]:
            raise DimensionMismatch(
                f"blocks must be square and equal-sized, got {a1.shape} and {a2.shape}"
            )
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)

    @property
    def n(self) -> int:
        return self.a1.shape[0]


def complex_structure(n: int) -> np.ndarray:
    """The compatible complex structure diag(i*id_n, -i*id_n)."""
    return np.diag(np.concatenate([1j * np.ones(n), -1j * np.ones(n)]))


def embed(a: BlockOperator) -> np.ndarray:
    """Assemble the full 2n x 2n matrix of a block operator."""
    return np.block([[a.g, a.h], [conj(a.h), conj(a.g)]])


def embed_tangent(t: BlockTangent) -> np.ndarray:
    return np.block([[t.a1, t.a2], [conj(t.a2), conj(t.a1)]])


def from_embedded(E: np.ndarray) -> BlockOperator:
    """Extract (g, h) from the top block row of a 2n x 2n matrix.

    Only the top row is read; the caller is responsible for E actually
    carrying the block pattern (the bottom row is then redundant).
    """
    E = as_complex(E)
    m = E.shape[0]
    if E.shape[0] != E.shape[1] or m % 2:
        raise DimensionMismatch(f"expected an even-sized square matrix, got {E.shape}")
    n = m // 2
    return BlockOperator(E[:n, :n], E[:n, n:])


def pattern_defect(E: np.ndarray) -> float:
    """Frobenius distance of a 2n x 2n matrix from the block pattern."""
    n = E.shape[0] // 2
    d1 = frobenius(E[n:, :n] - conj(E[:n, n:]))
    d2 = frobenius(E[n:, n:] - conj(E[:n, :n]))
    return float(np.hypot(d1, d2))


def compose(a: BlockOperator, b: BlockOperator) -> BlockOperator:
    """Operator product; the block shape is closed under composition."""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot compose sizes {a.n} and {b.n}")
    return BlockOperator(
        a.g @ b.g + a.h @ conj(b.h),
        a.g @ b.h + a.h @ conj(b.g),
    )


def block_adjoint(a: BlockOperator) -> BlockOperator:
    """Adjoint; in blocks (g, h) |-> (g*, h^T)."""
    return BlockOperator(adjoint(a.g), a.h.T)


def inverse(
    a: BlockOperator, sing_tol: float = SING_TOL, cond_max: float = COND_MAX
) -> BlockOperator:
    """Inverse block operator.

    Inverts the embedded 2n x 2n matrix; the block pattern is preserved
    exactly by inversion, so reading back the top block row loses nothing.

    Raises
    ------
    Singular
        If the smallest singular value of the embedded matrix is below
        sing_tol, or the condition number exceeds cond_max.
    """
    E = embed(a)
    s = singular_values(E)
    smin = float(s[-1])
    if smin < sing_tol:
        raise Singular(f"block operator is numerically singular (smin = {smin:.3e})")
    cond = float(s[0]) / smin
    if cond > cond_max:
        raise Singular(f"block operator is ill-conditioned (cond = {cond:.3e})")
    return from_embedded(np.linalg.inv(E))


def tangent_compose(t: BlockTangent, a: BlockOperator) -> BlockTangent:
    """Right-translate a tangent by a group element (matrix product t a)."""
    if t.n != a.n:
        raise DimensionMismatch(f"cannot compose sizes {t.n} and {a.n}")
    return BlockTangent(
        t.a1 @ a.g + t.a2 @ conj(a.h),
        t.a1 @ a.h + t.a2 @ conj(a.g),
    )


def compose_tangent(a: BlockOperator, t: BlockTangent) -> BlockTangent:
    """Left-translate a tangent by a group element (matrix product a t).

    For a Lie-algebra element A this is the generator vector field of the
    right multiplication action evaluated at a.
    """
    if t.n != a.n:
        raise DimensionMismatch(f"cannot compose sizes {a.n} and {t.n}")
    return BlockTangent(
        a.g @ t.a1 + a.h @ conj(t.a2),
        a.g @ t.a2 + a.h @ conj(t.a1),
    )


def mixed_norm(t: BlockTangent) -> float:
    """Trace norm of the diagonal block plus Hilbert-Schmidt norm of the off-diagonal."""
    return schatten_norm(t.a1, 1) + schatten_norm(t.a2, 2)


def is_sp(a: BlockOperator, tol: float = PASS_TOL) -> ResidualReport:
    """Symplectic-group membership: g*g - h^T conj(h) = id and g*h = h^T conj(g).

    Also reports the equivalent condition ||E* J E - J||_F on the embedded
    matrix; the two formulations satisfy form^2 = 2 (gram^2 + cross^2).
    """
    n = a.n
    gsg = adjoint(a.g) @ a.g
    r1 = frobenius(gsg - a.h.T @ conj(a.h) - np.eye(n))
    r2 = frobenius(adjoint(a.g) @ a.h - a.h.T @ conj(a.g))
    E = embed(a)
    J = complex_structure(n)
    r3 = frobenius(adjoint(E) @ J @ E - J)
    return ResidualReport("sp", {"gram": r1, "cross": r2, "form": r3}, tol)


def is_o12(a: BlockOperator, tol: float = PASS_TOL) -> ResidualReport:
    """Orthogonal-group membership: a*a = id on the embedded matrix."""
    E = embed(a)
    r = frobenius(adjoint(E) @ E - np.eye(2 * a.n))
    return ResidualReport("o12", {"orthogonality": r}, tol)


def is_u1(a: BlockOperator, tol: float = PASS_TOL) -> ResidualReport:
    """Unitary-isotropy membership: h = 0 and g unitary."""
    r_off = frobenius(a.h)
    r_uni = frobenius(adjoint(a.g) @ a.g - np.eye(a.n))
    return ResidualReport("u1", {"offdiag": r_off, "unitarity": r_uni}, tol)


def is_gl12(a: BlockOperator, tol: float = PASS_TOL, sing_tol: float = SING_TOL) -> ResidualReport:
    """Invertibility check; Schatten membership is automatic at finite size.

    The mixed norm ||g - id||_1 + ||h||_2 is reported as a diagnostic only.
    """
    E = embed(a)
    smin = float(singular_values(E)[-1])
    if smin < sing_tol:
        res = float("inf")
    else:
        res = frobenius(E @ np.linalg.inv(E) - np.eye(2 * a.n))
    diag = schatten_norm(a.g - np.eye(a.n), 1) + schatten_norm(a.h, 2)
    return ResidualReport(
        "gl12",
        {"inverse_residual": res},
        tol,
        extras={"sigma_min": smin, "mixed_norm": diag},
    )


def is_o12_algebra(t: BlockTangent, tol: float = PASS_TOL) -> ResidualReport:
    """Orthogonal Lie-algebra membership: T* + T = 0 on the embedded matrix."""
    T = embed_tangent(t)
    r = frobenius(adjoint(T) + T)
    return ResidualReport("o12_algebra", {"anti_hermitian": r}, tol)


def commutator(s: BlockTangent, t: BlockTangent) -> BlockTangent:
    S, T = embed_tangent(s), embed_tangent(t)
    return tangent_from_embedded(S @ T - T @ S)


def tangent_from_embedded(T: np.ndarray) -> BlockTangent:
    T = as_complex(T)
    m = T.shape[0]
    if T.shape[0] != T.shape[1] or m % 2:
        raise DimensionMismatch(f"expected an even-sized square matrix, got {T.shape}")
    n = m // 2
    return BlockTangent(T[:n, :n], T[:n, n:])


def sample_u1(rng: np.random.Generator, n: int) -> BlockOperator:
    """Random isotropy element: unitary diagonal block, zero off-diagonal."""
    return BlockOperator(sample_unitary(rng, n), np.zeros((n, n), dtype=np.complex128))


def sample_block_tangent(rng: np.random.Generator, n: int) -> BlockTangent:
    return BlockTangent(
        sample_matrix(rng, n, n, "general"),
        sample_matrix(rng, n, n, "general"),
    )


def sample_o12_tangent(rng: np.random.Generator, n: int) -> BlockTangent:
    """Random orthogonal-algebra element: anti-Hermitian a1, antisymmetric a2."""
    a1 = sample_matrix(rng, n, n, "anti_hermitian")
    G = sample_matrix(rng, n, n, "general")
    return BlockTangent(a1, (G - G.T) / 2.0)


def sample_o12(rng: np.random.Generator, n: int, scale: float = 1.0) -> BlockOperator:
    """Random orthogonal-group element as exp of a random algebra element.

    exp of an anti-Hermitian pattern matrix is exactly unitary and keeps
    the block pattern, so the sample lies in the group up to round-off.
    """
    from scipy.linalg import expm

    t = sample_o12_tangent(rng, n)
    E = expm(scale * embed_tangent(t))
    return from_embedded(E)
