"""Seeded verification suites with machine-readable reports.

Each suite replays the randomized invariants of one library area: group
membership, transitivity of the Moebius action, the momentum map and its
non-equivariance defect, the flat Kaehler structure, the reduced two-form,
the finite-dimensional dual pair, and a truncation-convergence probe.
Results are aggregated per named check as a worst-case residual against a
threshold.

Determinism: a run is a pure function of (suite, dim, trials, seed, tol,
margin). All randomness flows from one SeedSequence spawned per check in a
fixed order. Reports serialize to JSON with floats at 17 significant
digits; the wall-time field is the only nondeterministic entry and can be
suppressed for byte-level comparisons.

Thresholds default to the per-check values below and scale linearly with
dim beyond 16 (eigensolver error grows with size); the scale factor is
echoed in the report. A user-supplied tol replaces every threshold
verbatim. Boolean agreement checks (residual 0 or 1) never scale.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass

import numpy as np

from . import blocks, disc, dualpair, reduction
from .blocks import BlockOperator, BlockTangent
from .errors import ConfigInvalid, UnknownSuite
from .linalg import adjoint, conj, frobenius, sample_unitary

SUITE_NAMES = (
    "groups",
    "transitivity",
    "momentum",
    "defect",
    "kahler",
    "quotient-form",
    "findim",
    "convergence",
    "all",
)

DIM_MAX_ENV = "SIEGEL_DIM_MAX"
DIM_MAX_DEFAULT = 64

# Thresholds stated at or below this dimension apply verbatim; beyond it
# they scale by dim / SCALE_PIVOT.
SCALE_PIVOT = 16

FD_STEP = 1e-5

# Fixed dimensions for the truncation probe; the convergence suite uses
# these regardless of the configured dim.
PROBE_DIMS = (8, 16, 32, 64)


def dim_limit() -> int:
    """Maximum allowed dim, overridable through the environment."""
    raw = os.environ.get(DIM_MAX_ENV)
    if raw is None:
        return DIM_MAX_DEFAULT
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigInvalid(f"{DIM_MAX_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ConfigInvalid(f"{DIM_MAX_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class SuiteConfig:
    """Validated run configuration; construction raises ConfigInvalid."""

    suite: str
    dim: int = 8
    trials: int = 50
    seed: int = 0
    tol: float | None = None
    margin: float = 0.05
    report_path: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ConfigInvalid(f"dim must be >= 1, got {self.dim}")
        if self.dim > dim_limit():
            raise ConfigInvalid(f"dim {self.dim} exceeds limit {dim_limit()}")
        if self.trials < 1:
            raise ConfigInvalid(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ConfigInvalid(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.tol is not None and not self.tol > 0:
            raise ConfigInvalid(f"tol must be positive, got {self.tol}")
        if not 0.0 < self.margin < 0.5:
            raise ConfigInvalid(f"margin must lie in (0, 0.5), got {self.margin}")


@dataclass(frozen=True)
class CheckResult:
    name: str
    trials: int
    max_residual: float
    threshold: float
    passed: bool


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    config: SuiteConfig
    threshold_scale: float
    checks: tuple[CheckResult, ...]
    passed: bool
    wall_time_s: float

    def to_dict(self, timing: bool = True) -> dict:
        cfg = self.config
        return {
            "schema_version": 1,
            "suite": self.suite,
            "config": {
                "suite": cfg.suite,
                "dim": cfg.dim,
                "trials": cfg.trials,
                "seed": cfg.seed,
                "tol": cfg.tol,
                "margin": cfg.margin,
            },
            "threshold_scale": self.threshold_scale,
            "checks": [
                {
                    "name": c.name,
                    "trials": c.trials,
                    "max_residual": c.max_residual,
                    "threshold": c.threshold,
                    "passed": c.passed,
                }
                for c in self.checks
            ],
            "passed": self.passed,
            "wall_time_s": self.wall_time_s if timing else 0.0,
        }

    def to_json(self, timing: bool = True) -> str:
        return _render_json(self.to_dict(timing=timing)) + "\n"


def _render_json(value, indent: int = 0) -> str:
    """JSON with floats at 17 significant digits, insertion-ordered keys."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(
            f"{inner}{json.dumps(k)}: {_render_json(v, indent + 1)}"
            for k, v in value.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = ",\n".join(f"{inner}{_render_json(v, indent + 1)}" for v in value)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value)!r}")


class _Recorder:
    """Collects CheckResults, applying threshold scaling and tol override."""

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.scale = max(1.0, cfg.dim / SCALE_PIVOT)
        self.results: list[CheckResult] = []

    def add(self, name: str, threshold: float, residual: float, trials: int, scaled: bool = True):
        if self.cfg.tol is not None:
            thr = self.cfg.tol
        else:
            thr = threshold * self.scale if scaled else threshold
        residual = float(residual)
        self.results.append(CheckResult(name, trials, residual, float(thr), residual <= thr))


def _rngs(seq: np.random.SeedSequence, count: int) -> list[np.random.Generator]:
    return [np.random.default_rng(child) for child in seq.spawn(count)]


def _suite_groups(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    n, T, m = cfg.dim, cfg.trials, cfg.margin
    r_sp, r_o, r_u, r_inv, r_routes = _rngs(seq, 5)

    rec.add(
        "sp_sample_membership",
        1e-10,
        max(blocks.is_sp(disc.sample_sp(r_sp, n, m)).max_residual for _ in range(T)),
        T,
    )
    rec.add(
        "o12_sample_membership",
        1e-10,
        max(blocks.is_o12(blocks.sample_o12(r_o, n)).max_residual for _ in range(T)),
        T,
    )

    worst = 0.0
    for _ in range(T):
        u = blocks.sample_u1(r_u, n)
        worst = max(
            worst,
            blocks.is_u1(u).max_residual,
            blocks.is_sp(u).max_residual,
            blocks.is_o12(u).max_residual,
        )
    rec.add("u1_in_intersection", 1e-10, worst, T)

    worst = 0.0
    eye = np.eye(2 * n)
    for _ in range(T):
        a = disc.sample_sp(r_inv, n, m)
        b = blocks.inverse(a)
        worst = max(
            worst,
            frobenius(blocks.embed(blocks.compose(a, b)) - eye),
            frobenius(blocks.embed(blocks.compose(b, a)) - eye),
        )
    rec.add("inverse_composition", 1e-9, worst, T)

    worst = 0.0
    for _ in range(T):
        rep = blocks.is_sp(reduction.sample_flat(r_routes, n))
        expected = np.sqrt(2.0 * (rep.residuals["gram"] ** 2 + rep.residuals["cross"] ** 2))
        worst = max(worst, abs(rep.residuals["form"] - expected))
    rec.add("sp_residual_routes", 1e-9, worst, T)

    basis = reduction.o12_algebra_basis(n)
    worst = max(blocks.is_o12_algebra(A).max_residual for A in basis)
    rec.add("algebra_basis_membership", 1e-12, worst, len(basis))
    return rec.results


def _suite_transitivity(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    n, T, m = cfg.dim, cfg.trials, cfg.margin
    r_rt, r_cs, r_act, r_iso, r_push, r_fd, r_chain = _rngs(seq, 7)
    zero = np.zeros((n, n))

    worst = 0.0
    for _ in range(T):
        Z = disc.sample_point(r_rt, n, m)
        worst = max(worst, frobenius(disc.mobius(disc.transporter(Z, m), zero) - Z))
    rec.add("round_trip", 1e-9, worst, T)

    worst = 0.0
    for _ in range(T):
        Z = disc.sample_point(r_cs, n, m)
        worst = max(worst, frobenius(disc.coset_rep(disc.transporter(Z, m)) - Z))
    rec.add("coset_round_trip", 1e-9, worst, T)

    worst = 0.0
    for _ in range(T):
        a = disc.sample_sp(r_act, n, m)
        b = disc.sample_sp(r_act, n, m)
        Z = disc.sample_point(r_act, n, m)
        worst = max(
            worst,
            frobenius(disc.mobius(a, disc.mobius(b, Z)) - disc.mobius(blocks.compose(a, b), Z)),
        )
    rec.add("action_property", 1e-8, worst, T)

    worst = max(
        frobenius(disc.mobius(blocks.sample_u1(r_iso, n), zero)) for _ in range(T)
    )
    rec.add("isotropy_fixes_zero", 1e-12, worst, T)

    worst = 0.0
    eye = np.eye(n)
    for _ in range(T):
        a = disc.sample_sp(r_push, n, m)
        U = disc.sample_tangent(r_push, n)
        Z = disc.coset_rep(a)
        f1 = disc.pushforward_at_zero(a, U)
        f2 = disc.mobius_differential(a, zero, U)
        f3 = (eye - Z @ conj(Z)) @ a.g @ U @ np.linalg.inv(conj(a.g))
        worst = max(
            worst,
            frobenius(f1 - f2),
            frobenius(f1 - f3),
            frobenius(f1.T - f1),
        )
    rec.add("pushforward_routes", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        a = disc.sample_sp(r_fd, n, m)
        Z = disc.sample_point(r_fd, n, m)
        U = disc.sample_tangent(r_fd, n)
        U = U / max(frobenius(U), 1e-12)
        fd = (disc.mobius(a, Z + FD_STEP * U) - disc.mobius(a, Z - FD_STEP * U)) / (2 * FD_STEP)
        worst = max(worst, frobenius(fd - disc.mobius_differential(a, Z, U)))
    rec.add("differential_fd", 1e-6, worst, T)

    worst = 0.0
    for _ in range(T):
        a = disc.sample_sp(r_chain, n, m)
        b = disc.sample_sp(r_chain, n, m)
        Z = disc.sample_point(r_chain, n, m)
        U = disc.sample_tangent(r_chain, n)
        lhs = disc.mobius_differential(blocks.compose(a, b), Z, U)
        rhs = disc.mobius_differential(a, disc.mobius(b, Z), disc.mobius_differential(b, Z, U))
        worst = max(worst, frobenius(lhs - rhs))
    rec.add("chain_rule", 1e-8, worst, T)
    return rec.results


def _algebra_basis_subsample(n: int, rng: np.random.Generator) -> list[BlockTangent]:
    """Full generator basis through n = 8; a fixed-size draw beyond that."""
    basis = reduction.o12_algebra_basis(n)
    if n <= 8:
        return basis
    keep = rng.choice(len(basis), size=64, replace=False)
    return [basis[i] for i in sorted(keep)]


def _suite_momentum(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    n, T, m = cfg.dim, cfg.trials, cfg.margin
    r_ham, r_fd, r_imag, r_level, r_equiv = _rngs(seq, 5)

    worst = 0.0
    basis = _algebra_basis_subsample(n, r_ham)
    for _ in range(T):
        M = reduction.sample_flat(r_ham, n)
        V = blocks.sample_block_tangent(r_ham, n)
        dmu = reduction.momentum_differential(M, V)
        for A in basis:
            lhs = reduction.pair(dmu, A)
            rhs = reduction.kahler_omega(blocks.compose_tangent(M, A), V)
            worst = max(worst, abs(lhs - rhs))
    rec.add("hamiltonian_identity", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        M = reduction.sample_flat(r_fd, n)
        V = blocks.sample_block_tangent(r_fd, n)
        plus = reduction.momentum(BlockOperator(M.g + FD_STEP * V.a1, M.h + FD_STEP * V.a2))
        minus = reduction.momentum(BlockOperator(M.g - FD_STEP * V.a1, M.h - FD_STEP * V.a2))
        worst = max(worst, frobenius((plus - minus) / (2 * FD_STEP) - reduction.momentum_differential(M, V)))
    rec.add("differential_fd", 1e-6, worst, T)

    worst = 0.0
    basis_imag = _algebra_basis_subsample(n, r_imag)
    for _ in range(T):
        S = reduction.momentum(reduction.sample_flat(r_imag, n))
        worst = max(worst, max(abs(reduction.pair_imag(S, A)) for A in basis_imag))
    rec.add("pairing_real", 1e-12, worst, T)

    basis_level = _algebra_basis_subsample(n, r_level)
    worst = max(
        reduction.momentum_level_residual(disc.sample_sp(r_level, n, m), basis_level)
        for _ in range(T)
    )
    rec.add("level_set_on_sp", 1e-9, worst, T)

    eq_tol = 1e-9 * rec.scale
    worst = 0.0
    for _ in range(T):
        M = reduction.sample_flat(r_equiv, n)
        on_level = reduction.momentum_level_residual(M, basis_level) <= eq_tol
        in_sp = blocks.is_sp(M, eq_tol).passed
        worst = max(worst, 0.0 if on_level == in_sp else 1.0)
    rec.add("level_set_equivalence", 0.5, worst, T, scaled=False)
    return rec.results


def _suite_defect(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    n, T = cfg.dim, cfg.trials
    r_both, r_indep, r_u1 = _rngs(seq, 3)

    worst = 0.0
    for _ in range(T):
        M = reduction.sample_flat(r_both, n)
        a = blocks.sample_o12(r_both, n)
        A = blocks.sample_o12_tangent(r_both, n)
        lhs, rhs = reduction.equivariance_defect(M, a, A)
        worst = max(worst, abs(lhs - rhs))
    rec.add("lhs_equals_rhs", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        a = blocks.sample_o12(r_indep, n)
        A = blocks.sample_o12_tangent(r_indep, n)
        values = [
            reduction.equivariance_defect(reduction.sample_flat(r_indep, n), a, A)[0]
            for _ in range(10)
        ]
        worst = max(worst, max(values) - min(values))
    rec.add("m_independence", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        M = reduction.sample_flat(r_u1, n)
        u = blocks.sample_u1(r_u1, n)
        A = blocks.sample_o12_tangent(r_u1, n)
        lhs, rhs = reduction.equivariance_defect(M, u, A)
        worst = max(worst, abs(lhs), abs(rhs))
    rec.add("u1_defect_zero", 1e-10, worst, T)
    return rec.results


def _suite_kahler(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    n, T = cfg.dim, cfg.trials
    r_pos, r_anti, r_sq, r_compat, r_u1, r_real = _rngs(seq, 6)
    J = blocks.complex_structure(n)

    worst = 0.0
    for _ in range(T):
        V = blocks.sample_block_tangent(r_pos, n)
        worst = max(worst, max(0.0, 1e-12 - reduction.kahler_metric(V, V)))
    rec.add("metric_positive", 0.0, worst, T, scaled=False)

    worst = 0.0
    for _ in range(T):
        V = blocks.sample_block_tangent(r_anti, n)
        W = blocks.sample_block_tangent(r_anti, n)
        worst = max(
            worst,
            abs(reduction.kahler_omega(V, V)),
            abs(reduction.kahler_omega(V, W) + reduction.kahler_omega(W, V)),
        )
    rec.add("omega_antisymmetric", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        V = blocks.sample_block_tangent(r_sq, n)
        double = reduction.kahler_J(reduction.kahler_J(V))
        worst = max(worst, frobenius(blocks.embed_tangent(double) + blocks.embed_tangent(V)))
    rec.add("complex_structure_squares", 1e-12, worst, T)

    worst = 0.0
    for _ in range(T):
        V = blocks.sample_block_tangent(r_compat, n)
        W = blocks.sample_block_tangent(r_compat, n)
        direct = float(np.vdot(blocks.embed_tangent(V), J @ blocks.embed_tangent(W)).real)
        worst = max(worst, abs(reduction.kahler_omega(V, W) - direct))
    rec.add("compatibility_routes", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        V = blocks.sample_block_tangent(r_u1, n)
        W = blocks.sample_block_tangent(r_u1, n)
        u = blocks.sample_u1(r_u1, n)
        Vu = blocks.tangent_compose(V, u)
        Wu = blocks.tangent_compose(W, u)
        worst = max(
            worst,
            abs(reduction.kahler_metric(Vu, Wu) - reduction.kahler_metric(V, W)),
            abs(reduction.kahler_omega(Vu, Wu) - reduction.kahler_omega(V, W)),
            frobenius(
                blocks.embed_tangent(reduction.kahler_J(Vu))
                - blocks.embed_tangent(blocks.tangent_compose(reduction.kahler_J(V), u))
            ),
        )
    rec.add("u1_invariance", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        V = blocks.sample_block_tangent(r_real, n)
        W = blocks.sample_block_tangent(r_real, n)
        TV, TW = blocks.embed_tangent(V), blocks.embed_tangent(W)
        worst = max(worst, abs(np.vdot(TV, TW).imag), abs(np.vdot(TV, J @ TW).imag))
    rec.add("values_real", 1e-12, worst, T)
    return rec.results


def _suite_quotient_form(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    n, T, m = cfg.dim, cfg.trials, cfg.margin
    r_zero, r_routes, r_inv, r_coset, r_ident = _rngs(seq, 5)
    zero = np.zeros((n, n))

    worst = 0.0
    for _ in range(T):
        U = disc.sample_tangent(r_zero, n)
        V = disc.sample_tangent(r_zero, n)
        closed = 2.0 * float(np.trace(adjoint(U) @ V).imag)
        worst = max(worst, abs(reduction.omega_Q(zero, U, V) - closed))
    rec.add("value_at_zero", 1e-12, worst, T)

    worst = 0.0
    for _ in range(T):
        Z = disc.sample_point(r_routes, n, m)
        U = disc.sample_tangent(r_routes, n)
        V = disc.sample_tangent(r_routes, n)
        worst = max(worst, abs(reduction.omega_Q(Z, U, V) - reduction.omega_Q_alt(Z, U, V)))
    rec.add("route_agreement", 1e-10, worst, T)

    worst = 0.0
    for _ in range(T):
        a = disc.sample_sp(r_inv, n, m)
        Z = disc.sample_point(r_inv, n, m)
        U = disc.sample_tangent(r_inv, n)
        V = disc.sample_tangent(r_inv, n)
        worst = max(worst, reduction.omega_Q_invariance_residual(a, Z, U, V))
    rec.add("sp_invariance", 1e-8, worst, T)

    worst = 0.0
    for _ in range(T):
        a = disc.sample_sp(r_coset, n, m)
        u = blocks.sample_u1(r_coset, n)
        U = disc.sample_tangent(r_coset, n)
        V = disc.sample_tangent(r_coset, n)
        v1 = reduction.omega_Q(disc.coset_rep(a), U, V)
        v2 = reduction.omega_Q(disc.coset_rep(blocks.compose(a, u)), U, V)
        worst = max(worst, abs(v1 - v2))
    rec.add("coset_well_defined", 1e-9, worst, T)

    worst = 0.0
    eye = np.eye(n)
    for _ in range(T):
        a = disc.sample_sp(r_ident, n, m)
        Z = disc.coset_rep(a)
        worst = max(
            worst,
            frobenius((eye - Z @ conj(Z)) - np.linalg.inv(a.g @ adjoint(a.g))),
        )
    rec.add("resolvent_identity", 1e-10, worst, T)
    return rec.results


def _suite_findim(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    n, T = cfg.dim, cfg.trials
    r_level, r_equiv, r_hom, r_stab, r_image, r_comm, r_fd, r_anti = _rngs(seq, 8)
    J = dualpair.symplectic_j(n)

    worst = max(
        dualpair.mu_o_level_residual(dualpair.sample_sp_real(r_level, n)) for _ in range(T)
    )
    rec.add("level_value_on_sp", 1e-9, worst, T)

    eq_tol = 1e-9 * rec.scale
    worst = 0.0
    for _ in range(T):
        M = r_equiv.standard_normal((2 * n, 2 * n))
        on_level = dualpair.mu_o_level_residual(M) <= eq_tol
        in_sp = dualpair.is_sp_real(M, eq_tol).passed
        worst = max(worst, 0.0 if on_level == in_sp else 1.0)
    rec.add("level_set_equivalence", 0.5, worst, T, scaled=False)

    worst = 0.0
    for _ in range(T):
        u1 = sample_unitary(r_hom, n)
        u2 = sample_unitary(r_hom, n)
        lhs = dualpair.embed_unitary(u1 @ u2)
        rhs = dualpair.embed_unitary(u1) @ dualpair.embed_unitary(u2)
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    rec.add("embedding_homomorphism", 1e-12, worst, T)

    worst = 0.0
    for _ in range(T):
        M = dualpair.embed_unitary(sample_unitary(r_stab, n))
        worst = max(
            worst,
            dualpair.is_o_real(M).max_residual,
            float(np.linalg.norm(M.T @ J @ M - J)),
            float(np.linalg.norm(M @ J - J @ M)),
        )
    rec.add("embedding_in_stabilizer", 1e-12, worst, T)

    worst = 0.0
    for k in range(T):
        if k % 2:
            R = dualpair.embed_unitary(sample_unitary(r_image, n))
        else:
            R = dualpair.sample_o_real(r_image, n)
        stab = dualpair.stabilizer_check(R)
        u = dualpair.extract_unitary(R)
        X, Y = R[:n, :n], R[:n, n:]
        pattern = float(np.linalg.norm(np.block([[X, Y], [-Y, X]]) - R))
        unitary = float(np.linalg.norm(np.conj(u.T) @ u - np.eye(n)))
        in_image = unitary <= 1e-9 and pattern <= 1e-9
        worst = max(worst, 0.0 if stab == in_image else 1.0)
    rec.add("stabilizer_is_embedding_image", 0.5, worst, T, scaled=False)

    worst = 0.0
    for _ in range(T):
        S = dualpair.sample_sp_real(r_comm, n)
        R = dualpair.sample_o_real(r_comm, n)
        M = r_comm.standard_normal((2 * n, 2 * n))
        M = M / float(np.linalg.norm(M, 2))
        worst = max(
            worst,
            float(np.linalg.norm((S @ M) @ R - S @ (M @ R))),
            float(np.linalg.norm(dualpair.mu_o(S @ M) - dualpair.mu_o(M))),
            float(np.linalg.norm(dualpair.mu_sp(M @ R) - dualpair.mu_sp(M))),
        )
    rec.add("commuting_actions_preserve_levels", 1e-12, worst, T)

    worst = 0.0
    for _ in range(T):
        M = r_fd.standard_normal((2 * n, 2 * n))
        V = r_fd.standard_normal((2 * n, 2 * n))
        A_o = dualpair.sample_o_algebra(r_fd, n)
        A_sp = dualpair.sample_sp_algebra(r_fd, n)
        d_o = (dualpair.mu_o(M + FD_STEP * V) - dualpair.mu_o(M - FD_STEP * V)) / (2 * FD_STEP)
        d_sp = (dualpair.mu_sp(M + FD_STEP * V) - dualpair.mu_sp(M - FD_STEP * V)) / (2 * FD_STEP)
        worst = max(
            worst,
            abs(dualpair.trace_pair(d_o, A_o) - dualpair.omega_flat(M @ A_o, V)),
            abs(dualpair.trace_pair(d_sp, A_sp) - dualpair.omega_flat(A_sp @ M, V)),
        )
    rec.add("hamiltonian_identity_fd", 1e-6, worst, T)

    worst = 0.0
    for _ in range(T):
        u = r_anti.standard_normal((2 * n, 2 * n))
        v = r_anti.standard_normal((2 * n, 2 * n))
        worst = max(worst, abs(dualpair.omega_flat(u, v) + dualpair.omega_flat(v, u)))
    rec.add("omega_antisymmetric", 1e-12, worst, T)
    return rec.results


def convergence_probe(
    dims=PROBE_DIMS, decay: float = 2.0, seed: int = 0, amplitude: float = 1.0
) -> list[dict]:
    """Truncation behavior of a reference operator with power-law singular values.

    Builds diagonal data whose k-th singular value is amplitude * k^(-decay)
    (domain points capped at 0.9 so they stay strict contractions), truncates
    to each requested dimension, and reports per dimension: the mixed
    trace-norm diagnostic of the diagonal perturbation, the momentum pairing
    against a fixed generator, the reduced two-form on fixed tangents, and
    successive differences of the latter two. Truncations are corner
    consistent: smaller dimensions are leading submatrices of larger ones.

    For decay > 1 the diagnostic and both values converge (differences
    shrink); for decay <= 1 the trace-norm diagnostic grows without bound
    while Hilbert-Schmidt-type quantities may still settle.

    Raises
    ------
    ConfigInvalid
        If dims is not strictly ascending and positive, decay <= 0, or
        amplitude is outside [0, 1].
    """
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims) or any(b <= a for a, b in zip(dims, dims[1:])):
        raise ConfigInvalid(f"dims must be strictly ascending positive integers, got {dims}")
    if not decay > 0:
        raise ConfigInvalid(f"decay must be positive, got {decay}")
    if not 0.0 <= amplitude <= 1.0:
        raise ConfigInvalid(f"amplitude must lie in [0, 1], got {amplitude}")

    nmax = dims[-1]
    # One child stream per phase vector keeps truncations corner consistent:
    # the first n draws of a stream do not depend on nmax.
    seq_theta, seq_phi = np.random.SeedSequence(seed).spawn(2)
    theta = np.random.default_rng(seq_theta).uniform(0.0, 2.0 * np.pi, nmax)
    phi = np.random.default_rng(seq_phi).uniform(0.0, 2.0 * np.pi, nmax)
    weights = amplitude * np.arange(1, nmax + 1, dtype=np.float64) ** (-decay)
    zvals = 0.9 * weights * np.exp(1j * theta)
    uvals = weights * np.exp(1j * phi)
    vvals = 1j * uvals

    rows: list[dict] = []
    prev_pairing = prev_omega = None
    for n in dims:
        x = weights[:n]
        zeros = np.zeros((n, n), dtype=np.complex128)
        M = BlockOperator(np.eye(n) + np.diag(x), zeros)
        generator = BlockTangent(1j * np.eye(n), zeros)
        pairing = reduction.pair(reduction.momentum(M), generator)
        omega = reduction.omega_Q(np.diag(zvals[:n]), np.diag(uvals[:n]), np.diag(vvals[:n]))
        trace_norm = blocks.mixed_norm(BlockTangent(np.diag(x).astype(np.complex128), zeros))
        rows.append(
            {
                "dim": n,
                "trace_norm": trace_norm,
                "pairing": pairing,
                "omega_q": omega,
                "pairing_diff": None if prev_pairing is None else pairing - prev_pairing,
                "omega_q_diff": None if prev_omega is None else omega - prev_omega,
            }
        )
        prev_pairing, prev_omega = pairing, omega
    return rows


def _suite_convergence(cfg: SuiteConfig, seq) -> list[CheckResult]:
    rec = _Recorder(cfg)
    seed = int(seq.generate_state(1, dtype=np.uint64)[0])

    fast = convergence_probe(PROBE_DIMS, decay=2.0, seed=seed)
    diffs = [row["pairing_diff"] for row in fast[1:]]
    worst = max(0.0, max(b - a for a, b in zip(diffs, diffs[1:])))
    rec.add("pairing_diffs_decrease_decay2", 0.0, worst, len(PROBE_DIMS), scaled=False)

    odiffs = [row["omega_q_diff"] for row in fast[1:]]
    worst = max(0.0, max(b - a for a, b in zip(odiffs, odiffs[1:])))
    rec.add("omega_diffs_decrease_decay2", 0.0, worst, len(PROBE_DIMS), scaled=False)

    slow = convergence_probe(PROBE_DIMS, decay=0.6, seed=seed)
    ratio = slow[-1]["trace_norm"] / slow[0]["trace_norm"]
    rec.add(
        "trace_norm_grows_decay06", 0.0, max(0.0, 2.0 - ratio), len(PROBE_DIMS), scaled=False
    )

    silent = convergence_probe(PROBE_DIMS, decay=2.0, seed=seed, amplitude=0.0)
    worst = max(
        max(abs(row["trace_norm"]), abs(row["pairing"]), abs(row["omega_q"])) for row in silent
    )
    rec.add("zero_amplitude_all_zero", 0.0, worst, len(PROBE_DIMS), scaled=False)
    return rec.results


_SUITES = {
    "groups": _suite_groups,
    "transitivity": _suite_transitivity,
    "momentum": _suite_momentum,
    "defect": _suite_defect,
    "kahler": _suite_kahler,
    "quotient-form": _suite_quotient_form,
    "findim": _suite_findim,
    "convergence": _suite_convergence,
}


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Execute one named suite (or all of them) under the given config.

    Deterministic in (suite, dim, trials, seed, tol, margin): every check
    draws from its own child of one seed sequence, spawned in a fixed
    order.

    Raises
    ------
    UnknownSuite
        If cfg.suite is not a recognized name.
    """
    if cfg.suite not in SUITE_NAMES:
        raise UnknownSuite(f"unknown suite {cfg.suite!r}; choose from {SUITE_NAMES}")
    start = time.perf_counter()
    root = np.random.SeedSequence(cfg.seed)
    checks: list[CheckResult] = []
    if cfg.suite == "all":
        names = [s for s in SUITE_NAMES if s != "all"]
        for name, child in zip(names, root.spawn(len(names))):
            for c in _SUITES[name](cfg, child):
                checks.append(
                    CheckResult(f"{name}/{c.name}", c.trials, c.max_residual, c.threshold, c.passed)
                )
    else:
        checks = _SUITES[cfg.suite](cfg, root)
    elapsed = time.perf_counter() - start
    scale = max(1.0, cfg.dim / SCALE_PIVOT)
    return SuiteReport(
        suite=cfg.suite,
        config=cfg,
        threshold_scale=scale,
        checks=tuple(checks),
        passed=all(c.passed for c in checks),
        wall_time_s=elapsed,
    )
