"""Finite-dimensional dual pair on real 2n x 2n matrices.

The flat symplectic form is Tr(u^T J v) with J = [[0, I], [-I, 0]]. The
symplectic group acts by left multiplication with momentum -1/2 M M^T J;
the orthogonal group acts by right multiplication with momentum
-1/2 M^T J M. The stabilizer of J inside the orthogonal group is the image
of the unitary group under the standard real embedding, which is where the
quotient picture of the complex modules starts.

The level-set target is parameterized: with the -1/2 normalization the
symplectic group sits at level -1/2 J, and the membership predicate
M^T J M = J is provided separately so either convention can be checked.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from .blocks import ResidualReport
from .errors import NotUnitary

UNITARY_TOL = 1e-10


def symplectic_j(n: int) -> np.ndarray:
    """The standard form matrix [[0, I_n], [-I_n, 0]]."""
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    return J


def _as_real(M) -> np.ndarray:
    A = np.asarray(M, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] % 2:
        raise ValueError(f"expected an even-sized square real matrix, got {A.shape}")
    return A


def omega_flat(u: np.ndarray, v: np.ndarray) -> float:
    """Flat form Tr(u^T J v); antisymmetric."""
    u, v = _as_real(u), _as_real(v)
    return float(np.trace(u.T @ symplectic_j(u.shape[0] // 2) @ v))


def mu_sp(M: np.ndarray) -> np.ndarray:
    """Momentum coefficient of the left symplectic action: -1/2 M M^T J."""
    M = _as_real(M)
    return -0.5 * M @ M.T @ symplectic_j(M.shape[0] // 2)


def mu_o(M: np.ndarray) -> np.ndarray:
    """Momentum coefficient of the right orthogonal action: -1/2 M^T J M."""
    M = _as_real(M)
    return -0.5 * M.T @ symplectic_j(M.shape[0] // 2) @ M


def trace_pair(xi: np.ndarray, A: np.ndarray) -> float:
    """Duality pairing Tr(xi A) between coefficients and generators."""
    return float(np.trace(np.asarray(xi) @ np.asarray(A)).real)


def is_sp_real(M: np.ndarray, tol: float = 1e-9) -> ResidualReport:
    """Membership M^T J M = J in the real symplectic group."""
    M = _as_real(M)
    J = symplectic_j(M.shape[0] // 2)
    r = float(np.linalg.norm(M.T @ J @ M - J))
    return ResidualReport("sp_real", {"form": r}, tol)


def is_o_real(M: np.ndarray, tol: float = 1e-9) -> ResidualReport:
    """Membership M^T M = id in the real orthogonal group."""
    M = _as_real(M)
    r = float(np.linalg.norm(M.T @ M - np.eye(M.shape[0])))
    return ResidualReport("o_real", {"orthogonality": r}, tol)


def mu_o_level_residual(M: np.ndarray, target: np.ndarray | None = None) -> float:
    """Distance of mu_o(M) from the target level (default -1/2 J).

    -1/2 J is the value mu_o takes on the symplectic group under the -1/2
    normalization used here; pass another target to test other conventions.
    """
    M = _as_real(M)
    if target is None:
        target = -0.5 * symplectic_j(M.shape[0] // 2)
    return float(np.linalg.norm(mu_o(M) - target))


def embed_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> np.ndarray:
    """Real embedding [[Re u, Im u], [-Im u, Re u]] of a unitary matrix.

    The image is orthogonal, commutes with J, and the map is a group
    homomorphism; its image is exactly the J-stabilizer.

    Raises
    ------
    NotUnitary
        If ||u* u - id||_F exceeds tol.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got {u.shape}")
    defect = float(np.linalg.norm(np.conj(u.T) @ u - np.eye(u.shape[0])))
    if defect > tol:
        raise NotUnitary(f"matrix is not unitary: residual {defect:.3e}")
    X, Y = u.real, u.imag
    return np.block([[X, Y], [-Y, X]])


def extract_unitary(M: np.ndarray) -> np.ndarray:
    """Complex matrix Re-block + i Im-block read off the embedding pattern.

    Inverse of :func:`embed_unitary` on its image; for matrices off the
    image the result simply fails the unitarity/pattern checks.
    """
    M = _as_real(M)
    n = M.shape[0] // 2
    return M[:n, :n] + 1j * M[:n, n:]


def stabilizer_check(M: np.ndarray, tol: float = 1e-9) -> bool:
    """Whether an orthogonal M preserves the form matrix: M^T J M = J.

    For orthogonal M this is equivalent to commuting with J and to lying
    in the image of :func:`embed_unitary`.
    """
    M = _as_real(M)
    J = symplectic_j(M.shape[0] // 2)
    return bool(np.linalg.norm(M.T @ J @ M - J) <= tol)


def sample_sp_real(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    """Random real symplectic matrix exp(J S) with symmetric S, norm capped at 2."""
    G = rng.standard_normal((2 * n, 2 * n))
    S = (G + G.T) / 2.0
    top = float(np.linalg.norm(S, 2))
    if top > 2.0:
        S = S * (2.0 / top)
    return expm(symplectic_j(n) @ (scale * S))


def sample_o_real(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random real orthogonal 2n x 2n matrix via sign-fixed QR."""
    Q, R = np.linalg.qr(rng.standard_normal((2 * n, 2 * n)))
    return Q * np.sign(np.diagonal(R))


def sample_sp_algebra(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random element J S (S symmetric) of the real symplectic Lie algebra."""
    G = rng.standard_normal((2 * n, 2 * n))
    return symplectic_j(n) @ ((G + G.T) / 2.0)


def sample_o_algebra(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random antisymmetric 2n x 2n matrix."""
    G = rng.standard_normal((2 * n, 2 * n))
    return (G - G.T) / 2.0
