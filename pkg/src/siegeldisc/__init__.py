"""Finite-truncation geometry of the disc of symmetric contractions.

The library implements, at truncation size n, the block operator groups
acting on a doubled Hilbert space, the Moebius action on the disc of
symmetric strict contractions together with an explicit transporter making
the action transitive, the flat Kaehler structure on the ambient operator
space with its momentum map and non-equivariance defect, the reduced
two-form on the disc obtained from the zero level set, a classical
finite-dimensional dual pair over real matrices, and seeded verification
suites with JSON reports (also exposed through the ``siegeldisc`` console
script).
"""

from .blocks import (
    BlockOperator,
    BlockTangent,
    ResidualReport,
    block_adjoint,
    complex_structure,
    compose,
    compose_tangent,
    embed,
    embed_tangent,
    inverse,
    is_gl12,
    is_o12,
    is_o12_algebra,
    is_sp,
    is_u1,
    mixed_norm,
    sample_block_tangent,
    sample_o12,
    sample_o12_tangent,
    sample_u1,
    tangent_compose,
)
from .disc import (
    DiscMembership,
    coset_rep,
    is_in_disc,
    mobius,
    mobius_differential,
    pushforward_at_zero,
    sample_point,
    sample_sp,
    sample_tangent,
    transporter,
)
from .dualpair import (
    embed_unitary,
    extract_unitary,
    is_o_real,
    is_sp_real,
    mu_o,
    mu_o_level_residual,
    mu_sp,
    omega_flat,
    sample_o_real,
    sample_sp_real,
    stabilizer_check,
    symplectic_j,
)
from .errors import (
    ConfigInvalid,
    DenominatorSingular,
    DimensionMismatch,
    EigFailure,
    NotHermitian,
    NotSymmetric,
    NotUnitary,
    SiegelError,
    Singular,
    SpectrumAtOne,
    UnknownSuite,
)
from .linalg import (
    adjoint,
    conj,
    frobenius,
    hermitian_eig,
    opnorm,
    sample_matrix,
    sample_unitary,
    schatten_norm,
    singular_values,
)
from .matrixfunc import (
    abs_op,
    argtanh_scaled,
    argtanh_series,
    cosh_abs,
    exp_offdiag,
    sinch_abs,
    tanh_scaled,
)
from .reduction import (
    adstar,
    equivariance_defect,
    kahler_J,
    kahler_metric,
    kahler_omega,
    momentum,
    momentum_differential,
    momentum_level_residual,
    o12_algebra_basis,
    omega_Q,
    omega_Q_alt,
    omega_Q_invariance_residual,
    pair,
    pair_imag,
    sample_flat,
)
from .suites import (
    CheckResult,
    SuiteConfig,
    SuiteReport,
    convergence_probe,
    run_suite,
)

__version__ = "0.1.0"
