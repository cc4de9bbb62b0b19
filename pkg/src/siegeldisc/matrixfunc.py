"""Spectral matrix functions of |A| = (A*A)^(1/2) and the off-diagonal block exponential.

Every function of |A| is evaluated through the eigensystem of A*A rather
than by power series: spectral evaluation stays accurate as the operator
norm approaches 1, where the series for the inverse hyperbolic tangent
converges too slowly to be useful. A truncated series is kept only as an
independent cross-check for small norms.

Scalar rules with a removable singularity at 0 (sinh x / x, artanh x / x,
tanh x / x) switch to an explicit Taylor branch below a cutoff so no
division by a vanishing singular value ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .blocks import BlockOperator
from .errors import NotSymmetric, SpectrumAtOne
from .linalg import (
    CONTRACTION_MARGIN,
    SYM_TOL,
    adjoint,
    as_complex,
    frobenius,
    hermitian_eig,
    opnorm,
)

# Below this the Taylor branch of a scalar rule is used instead of the
# closed form, keeping full double precision through the singularity.
SINGULARITY_CUTOFF = 1e-8

# Samplers clip the operator norm to exactly 1 - margin; round-off can land
# a hair above, so the domain check for the inverse hyperbolic scaling
# allows this much overshoot.
SPECTRUM_SLACK = 1e-10


@dataclass(frozen=True)
class SafeSpectralFunction:
    """Scalar rule on singular values with an explicit branch near zero.

    Calling the instance evaluates elementwise, switching to the
    ``near_zero`` Taylor rule for |x| < cutoff. The regular branch is never
    evaluated at the small arguments (they are substituted away first), so
    rules that divide by x are safe.
    """

    name: str
    regular: Callable[[np.ndarray], np.ndarray]
    near_zero: Callable[[np.ndarray], np.ndarray]
    cutoff: float = SINGULARITY_CUTOFF

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        small = np.abs(x) < self.cutoff
        safe = np.where(small, 0.5, x)
        return np.where(small, self.near_zero(x), self.regular(safe))

    def apply(self, H: np.ndarray) -> np.ndarray:
        """Q f(w) Q* for Hermitian H = Q diag(w) Q*."""
        return hermitian_eig(H).apply(self)


SINCH = SafeSpectralFunction(
    "sinch",
    regular=lambda x: np.sinh(x) / x,
    near_zero=lambda x: 1.0 + x * x / 6.0,
)

ARGTANH_OVER_X = SafeSpectralFunction(
    "argtanh_over_x",
    regular=lambda x: np.arctanh(x) / x,
    near_zero=lambda x: 1.0 + x * x / 3.0,
)

TANH_OVER_X = SafeSpectralFunction(
    "tanh_over_x",
    regular=lambda x: np.tanh(x) / x,
    near_zero=lambda x: 1.0 - x * x / 3.0,
)


def _f_of_abs(A: np.ndarray, fn) -> np.ndarray:
    """fn(|A|) through the eigensystem of A*A; eigenvalue round-off clamped."""
    A = as_complex(A)
    eig = hermitian_eig(adjoint(A) @ A)
    s = np.sqrt(np.clip(eig.eigenvalues, 0.0, None))
    Q = eig.eigenvectors
    return (Q * fn(s)) @ adjoint(Q)


def abs_op(A: np.ndarray) -> np.ndarray:
    """The operator absolute value (A*A)^(1/2); Hermitian positive semidefinite."""
    return _f_of_abs(A, lambda s: s)


def cosh_abs(A: np.ndarray) -> np.ndarray:
    """cosh(|A|); Hermitian with eigenvalues >= 1."""
    return _f_of_abs(A, np.cosh)


def sinch_abs(A: np.ndarray) -> np.ndarray:
    """A * sinh(|A|)/|A| with the removable singularity at 0 filled in."""
    A = as_complex(A)
    return A @ _f_of_abs(A, SINCH)


def tanh_scaled(A: np.ndarray) -> np.ndarray:
    """A * tanh(|A|)/|A|; inverse of :func:`argtanh_scaled` on its range."""
    A = as_complex(A)
    return A @ _f_of_abs(A, TANH_OVER_X)


def argtanh_scaled(
    Z: np.ndarray,
    margin: float = CONTRACTION_MARGIN,
    slack: float = SPECTRUM_SLACK,
) -> np.ndarray:
    """Z * artanh(|Z|)/|Z|, defined for strict contractions.

    Satisfies |result| = artanh(|Z|) and, for plain-transpose symmetric Z,
    preserves that symmetry.

    Raises
    ------
    SpectrumAtOne
        If the operator norm of Z exceeds 1 - margin (plus slack for
        samples clipped exactly to the margin).
    """
    Z = as_complex(Z)
    top = opnorm(Z)
    if top > 1.0 - margin + slack:
        raise SpectrumAtOne(
            f"operator norm {top:.6f} exceeds 1 - margin = {1.0 - margin:.6f}"
        )
    return Z @ _f_of_abs(Z, ARGTANH_OVER_X)


def argtanh_series(Z: np.ndarray, terms: int = 64) -> np.ndarray:
    """Truncated odd series sum_k Z (Z*Z)^k / (2k+1) for artanh scaling.

    Cross-check oracle only: convergence degrades near operator norm 1,
    so use it below 0.5 where 64 terms reach full precision.
    """
    Z = as_complex(Z)
    gram = adjoint(Z) @ Z
    acc = np.zeros_like(Z)
    term = Z.copy()
    for k in range(terms):
        acc = acc + term / (2 * k + 1)
        term = term @ gram
    return acc


def exp_offdiag(A: np.ndarray, sym_tol: float = SYM_TOL) -> BlockOperator:
    """Exponential of [[0, A], [conj(A), 0]] for plain-transpose symmetric A.

    The square of the exponent is diag(A A*, A* A), which forces the
    closed form: diagonal blocks cosh((A A*)^(1/2)) and cosh((A* A)^(1/2)),
    off-diagonal blocks A sinh(|A|)/|A| and its conjugate. The result is a
    valid block operator because symmetry of A makes conj(A) = A*.

    Always lands in the symplectic group (up to eigensolver round-off).

    Raises
    ------
    NotSymmetric
        If ||A^T - A||_F exceeds sym_tol.
    """
    A = as_complex(A)
    defect = frobenius(A.T - A)
    if defect > sym_tol:
        raise NotSymmetric(f"block exponent must satisfy A^T = A; defect {defect:.3e}")
    return BlockOperator(cosh_abs(adjoint(A)), sinch_abs(A))
