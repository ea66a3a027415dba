"""Monte-Carlo verification that empirical dot products match the kernels.

``empirical_profile`` repeats the experiment behind the headline figure:
sample a fresh phase matrix per replicate, encode a displacement grid, dot
each embedding against the embedding of the origin, and aggregate mean and
spread across replicates next to the analytic kernel curve.

Replicate ``r`` uses the seed ``derive_seed(master_seed, r)``, so profiles
are bit-identical however the replicates are scheduled; aggregation uses
NumPy's pairwise summation over the replicate axis, which is likewise
order-insensitive here because rows are stored by replicate index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import encoder
from .domain import KernelProfile, PeriodicDomain, SamplerSpec, SamplerVariant, validate_phase_matrix
from .kernels import (
    analytic_kernel,
    dirichlet_kernel,
    periodic_gaussian_kernel,
    periodic_gaussian_theta,
)
from .sampling import derive_seed, pmf_for_sampler, sample_phase_matrix


@dataclass(frozen=True, eq=False)
class ProfileConfig:
    """Inputs of one Monte-Carlo kernel profile."""

    embed_dim: int
    replicates: int
    sampler: SamplerSpec
    domain: PeriodicDomain
    grid: np.ndarray
    master_seed: int

    def __post_init__(self):
        if int(self.replicates) != self.replicates or self.replicates < 1:
            raise ValueError(f"replicates must be a positive integer, got {self.replicates}")
        grid = np.ascontiguousarray(self.grid, dtype=np.float64)
        if grid.ndim != 1 or grid.size == 0:
            raise ValueError("grid must be a nonempty vector of displacements")
        if np.any(np.diff(grid) < 0):
            raise ValueError("grid must be sorted ascending")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError(f"master_seed must fit in 64 unsigned bits, got {self.master_seed}")
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)


def default_grid(period: float, points: int = 257) -> np.ndarray:
    """Uniform displacement grid over one symmetric period [-t/2, t/2]."""
    return np.linspace(-period / 2.0, period / 2.0, points)


def empirical_profile(cfg: ProfileConfig) -> KernelProfile:
    """Estimate the similarity kernel by averaging embedding dot products.

    Displacements are applied along the first feature axis (the analytic
    kernel is unchanged: the remaining axes contribute factors of one).
    Returns the per-grid-point mean and population standard deviation over
    replicates together with the analytic kernel of the configured sampler.
    """
    grid = cfg.grid
    points = np.zeros((grid.size + 1, cfg.domain.n))
    points[1:, 0] = grid  # row 0 stays the origin

    sims = np.empty((cfg.replicates, grid.size))
    for r in range(cfg.replicates):
        pm = sample_phase_matrix(
            cfg.embed_dim, cfg.domain, cfg.sampler, derive_seed(cfg.master_seed, r)
        )
        emb = encoder.encode_many(pm, points)
        sims[r] = emb[1:] @ emb[0]

    return KernelProfile(
        displacements=grid,
        analytic=analytic_kernel(cfg.sampler, grid, cfg.domain.period),
        empirical_mean=sims.mean(axis=0),
        empirical_std=sims.std(axis=0),
        replicates=cfg.replicates,
    )


@dataclass(frozen=True)
class ProfileReport:
    """Deviation summary between the empirical mean and the analytic curve."""

    max_abs_deviation: float
    mean_abs_deviation: float
    worst_displacement: float


def profile_report(profile: KernelProfile) -> ProfileReport:
    dev = np.abs(profile.empirical_mean - profile.analytic)
    worst = int(np.argmax(dev))
    return ProfileReport(
        max_abs_deviation=float(dev[worst]),
        mean_abs_deviation=float(dev.mean()),
        worst_displacement=float(profile.displacements[worst]),
    )


# ---------------------------------------------------------------------------
# Cross-module invariant checks (the `verify` CLI command).
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check_matrix_validity(seed, sample_fn):
    worst = ""
    for i, d in enumerate((8, 33, 100)):
        for variant in (SamplerVariant.UNIFORM_BAND, SamplerVariant.DISCRETE_NORMAL):
            sampler = (
                SamplerSpec(variant, band=5)
                if variant is SamplerVariant.UNIFORM_BAND
                else SamplerSpec(variant, band=5, sigma=1.0)
            )
            pm = sample_fn(d, PeriodicDomain(2, 2 * np.pi), sampler, derive_seed(seed, i))
            result = validate_phase_matrix(pm)
            if not result:
                worst = "; ".join(result.violations)
                return False, f"sampled matrix invalid: {worst}"
    return True, "sampled matrices valid for d in (8, 33, 100), both samplers"


def _check_periodicity(seed, sample_fn):
    domain = PeriodicDomain(2, 2 * np.pi)
    pm = sample_fn(64, domain, SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5), derive_seed(seed, 10))
    rng = np.random.default_rng(derive_seed(seed, 11))
    worst = 0.0
    for x in rng.normal(scale=domain.period, size=(20, domain.n)):
        base = encoder.encode(pm, x).values
        for j in range(domain.n):
            shifted = x.copy()
            shifted[j] += domain.period
            worst = max(worst, float(np.max(np.abs(encoder.encode(pm, shifted).values - base))))
    return worst < 1e-9, f"max shift error {worst:.3e} (tol 1e-9)"


def _check_unit_norm(seed, sample_fn):
    domain = PeriodicDomain(3, 1.5)
    pm = sample_fn(33, domain, SamplerSpec(SamplerVariant.DISCRETE_NORMAL, band=4, sigma=2.0), derive_seed(seed, 20))
    rng = np.random.default_rng(derive_seed(seed, 21))
    emb = encoder.encode_many(pm, rng.normal(size=(50, domain.n)))
    worst = float(np.max(np.abs(np.linalg.norm(emb, axis=1) - 1.0)))
    return worst < 1e-9, f"max norm error {worst:.3e} (tol 1e-9)"


def _check_shift_invariance(seed, sample_fn):
    domain = PeriodicDomain(1, 2 * np.pi)
    pm = sample_fn(100, domain, SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5), derive_seed(seed, 30))
    rng = np.random.default_rng(derive_seed(seed, 31))
    worst = 0.0
    for _ in range(20):
        x, y, s = rng.normal(scale=3.0, size=3)
        base = encoder.similarity(encoder.encode(pm, x), encoder.encode(pm, y))
        moved = encoder.similarity(encoder.encode(pm, x + s), encoder.encode(pm, y + s))
        worst = max(worst, abs(base - moved))
    return worst < 1e-9, f"max similarity shift {worst:.3e} (tol 1e-9)"


def _check_binding(seed, sample_fn):
    domain = PeriodicDomain(2, 2 * np.pi)
    pm = sample_fn(64, domain, SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5), derive_seed(seed, 40))
    rng = np.random.default_rng(derive_seed(seed, 41))
    worst = 0.0
    for _ in range(20):
        x, y = rng.normal(scale=2.0, size=(2, domain.n))
        bound = encoder.bind(encoder.encode(pm, x), encoder.encode(pm, y))
        direct = encoder.encode(pm, x + y)
        worst = max(worst, float(np.max(np.abs(bound.values - direct.values))))
    return worst < 1e-6, f"max binding error {worst:.3e} (tol 1e-6)"


def _check_dirichlet_forms(seed, sample_fn):
    rng = np.random.default_rng(derive_seed(seed, 50))
    period = 2 * np.pi
    x = np.concatenate([
        rng.uniform(-2 * period, 2 * period, size=2000),
        rng.uniform(-1e-6, 1e-6, size=200),
        period + rng.uniform(-1e-6, 1e-6, size=200),
        -period + rng.uniform(-1e-6, 1e-6, size=200),
    ])
    worst = 0.0
    for band in (1, 5, 12):
        s = dirichlet_kernel(x, band, period, form="sum")
        r = dirichlet_kernel(x, band, period, form="ratio")
        worst = max(worst, float(np.max(np.abs(s - r))))
    return worst < 1e-9, f"max |sum - ratio| {worst:.3e} (tol 1e-9)"


def _check_theta_agreement(seed, sample_fn):
    worst = 0.0
    for sigma in (0.5, 1.0, 2.0):
        for period in (1.0, 2 * np.pi):
            grid = default_grid(period, 101)
            closed = periodic_gaussian_theta(grid, sigma, period)
            banded = periodic_gaussian_kernel(grid, 50, sigma, period)
            worst = max(worst, float(np.max(np.abs(closed - banded))))
    return worst < 1e-6, f"max |theta - banded sum| {worst:.3e} (tol 1e-6)"


def _check_pmf_duality(seed, sample_fn):
    period = 2 * np.pi
    grid = default_grid(period, 101)
    worst = 0.0
    for sampler in (
        SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5),
        SamplerSpec(SamplerVariant.DISCRETE_NORMAL, band=5, sigma=1.0),
    ):
        pmf = pmf_for_sampler(sampler, period)
        dual = pmf.cosine_transform(grid, period)
        direct = analytic_kernel(sampler, grid, period)
        worst = max(worst, float(np.max(np.abs(dual - direct))))
    return worst < 1e-12, f"max |pmf transform - kernel| {worst:.3e} (tol 1e-12)"


def _check_adjacency(seed, sample_fn):
    domain = PeriodicDomain(1, 2 * np.pi)
    pm = sample_fn(256, domain, SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5), derive_seed(seed, 60))
    eps = np.array([0.5, 0.25, 0.1, 0.01, 0.001])
    lo = encoder.encode_many(pm, eps)
    hi = encoder.encode_many(pm, 2 * np.pi - eps)
    sims = np.einsum("ij,ij->i", lo, hi)
    dists = np.linalg.norm(lo - hi, axis=1)
    ok = bool(np.all(np.diff(sims) > 0) and np.all(np.diff(dists) < 0) and sims[-1] > 0.99)
    return ok, f"similarity {np.round(sims, 4).tolist()} increasing toward 1"


_CHECKS = (
    ("phase-matrix-validity", _check_matrix_validity),
    ("exact-periodicity", _check_periodicity),
    ("unit-norm", _check_unit_norm),
    ("shift-invariance", _check_shift_invariance),
    ("binding-homomorphism", _check_binding),
    ("dirichlet-sum-ratio-equivalence", _check_dirichlet_forms),
    ("theta-agreement", _check_theta_agreement),
    ("pmf-kernel-duality", _check_pmf_duality),
    ("adjacency-limits", _check_adjacency),
)


def run_checks(seed: int = 2024, sample_fn=None) -> list[CheckResult]:
    """Run the cross-module invariant suite; one result per named check.

    ``sample_fn`` replaces the phase-matrix sampler (test hook for fault
    injection); it defaults to :func:`cycssp.sampling.sample_phase_matrix`.
    """
    if sample_fn is None:
        sample_fn = sample_phase_matrix
    results = []
    for name, fn in _CHECKS:
        try:
            passed, detail = fn(seed, sample_fn)
        except Exception as exc:  # a broken matrix may raise before any assert
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name, passed, detail))
    return results
