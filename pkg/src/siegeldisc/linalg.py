"""Dense complex-matrix substrate.

Conventions used throughout the library: the positive basis {e_k} is fixed,
the negative basis is its image under conjugation, so the "bar" operation on
operators is exactly entrywise conjugation of the matrix, the plain transpose
is conjugation followed by the adjoint, and all Schatten norms are computed
from singular values obtained through a Hermitian eigendecomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigFailure, NotHermitian

# Default tolerances; every operation taking a tolerance accepts an override.
HERM_TOL = 1e-10
EIG_TOL = 1e-10
SYM_TOL = 1e-10
SING_TOL = 1e-13
COND_MAX = 1e12
CONTRACTION_MARGIN = 0.05

SAMPLE_KINDS = (
    "general",
    "hermitian",
    "anti_hermitian",
    "symmetric_T",
    "contraction_symmetric",
)


def as_complex(M) -> np.ndarray:
    """Coerce input to a 2-d complex128 array without copying when possible."""
    A = np.asarray(M, dtype=np.complex128)
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={A.ndim}")
    return A


def conj(M: np.ndarray) -> np.ndarray:
    """Entrywise complex conjugate (the bar operation)."""
    return np.conj(M)


def transpose(M: np.ndarray) -> np.ndarray:
    """Plain transpose without conjugation, i.e. adjoint of the conjugate."""
    return np.asarray(M).T


def adjoint(M: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(M).T)


def frobenius(M: np.ndarray) -> float:
    return float(np.linalg.norm(M))


def singular_values(M: np.ndarray) -> np.ndarray:
    """Singular values in descending order.

    Computed as the square roots of the eigenvalues of M*M; round-off
    eigenvalues below zero are clamped to 0 so the square root is safe.
    """
    M = as_complex(M)
    w = np.linalg.eigvalsh(adjoint(M) @ M)
    return np.sqrt(np.clip(w[::-1], 0.0, None))


def opnorm(M: np.ndarray) -> float:
    """Largest singular value."""
    s = singular_values(M)
    return float(s[0]) if s.size else 0.0


def schatten_norm(M: np.ndarray, p) -> float:
    """Schatten norm of a dense matrix.

    Parameters
    ----------
    M : array_like
        Complex matrix.
    p : {1, 2, "op"}
        1 for the trace norm (sum of singular values), 2 for the
        Frobenius / Hilbert-Schmidt norm, "op" for the operator norm
        (largest singular value).
    """
    M = as_complex(M)
    if p == 2:
        return frobenius(M)
    s = singular_values(M)
    if p == 1:
        return float(np.sum(s))
    if p == "op":
        return float(s[0]) if s.size else 0.0
    raise ValueError(f"unsupported Schatten index {p!r}; use 1, 2 or 'op'")


@dataclass(frozen=True)
class HermitianEig:
    """Eigendecomposition H = Q diag(eigenvalues) Q* of a Hermitian matrix.

    Eigenvalues ascend; Q has orthonormal columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def apply(self, f) -> np.ndarray:
        """Assemble Q f(eigenvalues) Q* for a vectorized scalar function."""
        Q = self.eigenvectors
        return (Q * f(self.eigenvalues)) @ adjoint(Q)

    def reconstruct(self) -> np.ndarray:
        return self.apply(lambda w: w)


def hermitian_eig(H: np.ndarray, herm_tol: float = HERM_TOL) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix.

    Raises
    ------
    NotHermitian
        If ||H - H*||_F exceeds herm_tol * ||H||_F.
    EigFailure
        If the underlying decomposition does not converge.
    """
    H = as_complex(H)
    defect = frobenius(H - adjoint(H))
    if defect > herm_tol * max(frobenius(H), 1e-300):
        raise NotHermitian(
            f"matrix is not Hermitian: ||H - H*||_F = {defect:.3e}"
        )
    try:
        w, Q = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise EigFailure(str(exc)) from exc
    return HermitianEig(eigenvalues=w, eigenvectors=Q)


def _standard_complex(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    re = rng.standard_normal((rows, cols))
    im = rng.standard_normal((rows, cols))
    return (re + 1j * im) / np.sqrt(2.0)


def sample_matrix(
    rng: np.random.Generator,
    rows: int,
    cols: int,
    kind: str = "general",
    margin: float = CONTRACTION_MARGIN,
) -> np.ndarray:
    """Draw a random matrix of the requested structure, deterministic in rng.

    Kinds: "general" (complex Gaussian entries), "hermitian",
    "anti_hermitian", "symmetric_T" (plain-transpose symmetric), and
    "contraction_symmetric" (symmetric with operator norm <= 1 - margin,
    obtained by rescaling with (1 - margin)/max(1, opnorm)).

    Structured kinds require rows == cols. Symmetric samples are pre-scaled
    so their operator norms spread over (0, 1]-ish before the contraction
    rescale, which keeps test points both near and away from the boundary.
    """
    if kind not in SAMPLE_KINDS:
        raise ValueError(f"unknown sample kind {kind!r}")
    if kind != "general" and rows != cols:
        raise ValueError(f"kind {kind!r} requires a square shape")
    G = _standard_complex(rng, rows, cols)
    if kind == "general":
        return G
    if kind == "hermitian":
        return (G + adjoint(G)) / 2.0
    if kind == "anti_hermitian":
        return (G - adjoint(G)) / 2.0
    S = (G + G.T) / 2.0
    if kind == "symmetric_T":
        return S
    # contraction_symmetric: typical opnorm of S is ~sqrt(n); normalize first
    S = S / (2.0 * np.sqrt(max(rows, 1)))
    return S * ((1.0 - margin) / max(1.0, opnorm(S)))


def sample_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish random unitary via QR of a complex Gaussian with phase fix."""
    Q, R = np.linalg.qr(_standard_complex(rng, n, n))
    d = np.diagonal(R)
    return Q * (d / np.abs(d))
