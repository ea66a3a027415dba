"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run ``pytest -s`` to see them on
success; failures always show the line in the captured output).
"""

import math
import time

import numpy as np
import pytest
from scipy import stats

from cycssp import (
    PeriodicDomain,
    SamplerSpec,
    SamplerVariant,
    bind,
    default_grid,
    derive_seed,
    dirichlet_kernel,
    empirical_profile,
    encode,
    encode_many,
    periodic_gaussian_kernel,
    periodic_gaussian_theta,
    pmf_for_sampler,
    product_kernel,
    profile_report,
    sample_phase_matrix,
    theta,
)
from cycssp.kernels import KernelSpec, KernelVariant
from cycssp.verification import ProfileConfig

TWO_PI = 2.0 * np.pi
UNIFORM = SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5)
NORMAL = SamplerSpec(SamplerVariant.DISCRETE_NORMAL, band=5, sigma=1.0)
ANGLES = PeriodicDomain(1, TWO_PI)


def report(criterion, passed, detail):
    print(f"{'PASS' if passed else 'FAIL'} {criterion}: {detail}")
    assert passed, f"{criterion}: {detail}"


def figure1_profile(sampler, stream):
    cfg = ProfileConfig(
        embed_dim=100,
        replicates=500,
        sampler=sampler,
        domain=ANGLES,
        grid=default_grid(TWO_PI, 257),
        master_seed=derive_seed(2024, stream),
    )
    return empirical_profile(cfg)


def test_01_figure1_dirichlet():
    start = time.perf_counter()
    rep = profile_report(figure1_profile(UNIFORM, 0))
    elapsed = time.perf_counter() - start
    report(
        "criterion 1 (Monte-Carlo Dirichlet profile, N=500 d=100 B=5)",
        rep.max_abs_deviation < 0.05 and elapsed < 60.0,
        f"max deviation {rep.max_abs_deviation:.4f} (tol 0.05), {elapsed:.1f}s (limit 60s)",
    )


def test_02_figure1_periodic_gaussian():
    start = time.perf_counter()
    rep = profile_report(figure1_profile(NORMAL, 1))
    elapsed = time.perf_counter() - start
    report(
        "criterion 2 (Monte-Carlo periodic Gaussian profile, sigma=1)",
        rep.max_abs_deviation < 0.05 and elapsed < 60.0,
        f"max deviation {rep.max_abs_deviation:.4f} (tol 0.05), {elapsed:.1f}s (limit 60s)",
    )


def test_03_exact_periodicity():
    domain = PeriodicDomain(2, TWO_PI)
    rng = np.random.default_rng(333)
    worst = 0.0
    cases = 0
    for d in (64, 100, 257):
        for i in range(34 if d == 64 else 33):
            pm = sample_phase_matrix(d, domain, UNIFORM, derive_seed(333, d, i))
            x = rng.normal(scale=TWO_PI, size=2)
            base = encode(pm, x).values
            for j in range(2):
                shifted = x.copy()
                shifted[j] += TWO_PI
                worst = max(worst, float(np.max(np.abs(encode(pm, shifted).values - base))))
            cases += 1
    report(
        "criterion 3 (exact periodicity over 100 matrices, d in {64,100,257})",
        worst < 1e-9 and cases == 100,
        f"max infinity-norm shift error {worst:.3e} (tol 1e-9) over {cases} (pm, x) pairs",
    )


def test_04_adjacency_limits():
    pm = sample_phase_matrix(256, ANGLES, UNIFORM, seed=42)
    eps = np.array([0.5, 0.25, 0.1, 0.01, 0.001])
    lo = encode_many(pm, eps)
    hi = encode_many(pm, TWO_PI - eps)
    sims = np.einsum("ij,ij->i", lo, hi)
    dists = np.linalg.norm(lo - hi, axis=1)
    passed = bool(np.all(np.diff(sims) > 0) and np.all(np.diff(dists) < 0) and sims[-1] > 0.99)
    report(
        "criterion 4 (wraparound adjacency, d=256 B=5)",
        passed,
        f"similarity at eps=1e-3 is {sims[-1]:.6f} (>0.99), "
        f"monotone over eps ladder: sims {np.round(sims, 4).tolist()}",
    )


def test_05_binding_homomorphism():
    rng = np.random.default_rng(555)
    worst = 0.0
    for d in (64, 100):
        pm = sample_phase_matrix(d, ANGLES, UNIFORM, derive_seed(55, d))
        for _ in range(50):
            x, y = rng.uniform(-6, 6, size=2)
            bound = bind(encode(pm, x), encode(pm, y))
            worst = max(worst, float(np.max(np.abs(bound.values - encode(pm, x + y).values))))
    report(
        "criterion 5 (binding homomorphism over 100 pairs, d in {64,100})",
        worst < 1e-6,
        f"max infinity-norm error {worst:.3e} (tol 1e-6)",
    )


def test_06_dirichlet_sum_ratio_equivalence():
    rng = np.random.default_rng(666)
    x = np.concatenate([
        rng.uniform(-3 * TWO_PI, 3 * TWO_PI, size=8500),
        rng.uniform(-1e-6, 1e-6, size=500),
        TWO_PI + rng.uniform(-1e-6, 1e-6, size=500),
        -TWO_PI + rng.uniform(-1e-6, 1e-6, size=500),
    ])
    worst = 0.0
    for band in (1, 5, 12):
        s = dirichlet_kernel(x, band, TWO_PI, form="sum")
        r = dirichlet_kernel(x, band, TWO_PI, form="ratio")
        worst = max(worst, float(np.max(np.abs(s - r))))
    report(
        "criterion 6 (Dirichlet cosine-sum vs sine-ratio on 10^4 points)",
        worst < 1e-9,
        f"max |sum - ratio| {worst:.3e} (tol 1e-9), including points within 1e-6 of 0 and +/-period",
    )


def test_07_theta_form_adjudication():
    worst = 0.0
    for sigma in (0.5, 1.0, 2.0):
        for period in (1.0, TWO_PI):
            grid = np.linspace(-period / 2, period / 2, 201)
            closed = periodic_gaussian_theta(grid, sigma, period)
            banded = periodic_gaussian_kernel(grid, 50, sigma, period)
            worst = max(worst, float(np.max(np.abs(closed - banded))))

    # The linear-sigma nome variant must fail wherever the nome is not
    # negligible, and coincide at sigma = 1.
    def linear_sigma_ratio(xs, sigma, period):
        tau = math.exp(-((TWO_PI / period) ** 2) / (2.0 * sigma))
        return theta(np.pi * xs / period, tau) / theta(0.0, tau)

    alt_fails = all(
        np.max(np.abs(linear_sigma_ratio(np.linspace(-p / 2, p / 2, 201), s, p)
                      - periodic_gaussian_kernel(np.linspace(-p / 2, p / 2, 201), 50, s, p))) > 1e-2
        for s, p in ((0.5, TWO_PI), (2.0, 1.0), (2.0, TWO_PI))
    )
    alt_matches_at_one = all(
        np.max(np.abs(linear_sigma_ratio(np.linspace(-p / 2, p / 2, 201), 1.0, p)
                      - periodic_gaussian_kernel(np.linspace(-p / 2, p / 2, 201), 50, 1.0, p))) < 1e-6
        for p in (1.0, TWO_PI)
    )
    report(
        "criterion 7 (theta ratio with variance-form nome vs B=50 sum)",
        worst < 1e-6 and alt_fails and alt_matches_at_one,
        f"max |theta - sum| {worst:.3e} (tol 1e-6) over sigma in (0.5,1,2), period in (1,2pi); "
        "linear-sigma nome deviates > 1e-2 except at sigma=1",
    )


def test_08_pmf_kernel_fourier_duality():
    worst = 0.0
    for sampler in (UNIFORM, NORMAL):
        for period in (1.0, TWO_PI):
            grid = np.linspace(-period, period, 801)
            pmf = pmf_for_sampler(sampler, period)
            dual = pmf.cosine_transform(grid, period)
            spec = KernelSpec.for_sampler(sampler, period)
            worst = max(worst, float(np.max(np.abs(dual - spec.evaluate(grid)))))
    report(
        "criterion 8 (PMF cosine transform equals analytic kernel)",
        worst < 1e-12,
        f"max deviation {worst:.3e} (tol 1e-12) over both samplers, dense grid",
    )


def test_09_sampler_distribution_fit():
    draws = 100_000
    details = []
    passed = True
    for sampler, label in ((UNIFORM, "uniform"), (NORMAL, "discrete-normal")):
        pm = sample_phase_matrix(2 * draws + 1, ANGLES, sampler, seed=12345)
        free = pm.index_matrix[1 : draws + 1, 0]
        counts = np.bincount(free + 5, minlength=11)
        p = pmf_for_sampler(sampler, TWO_PI).probabilities
        _, pvalue = stats.chisquare(counts, f_exp=p * draws)
        details.append(f"{label} p={pvalue:.3f}")
        passed = passed and pvalue > 0.001
    report(
        "criterion 9 (goodness of fit over 1e5 index draws)",
        passed,
        ", ".join(details) + " (significance 0.001)",
    )


def test_10_product_kernel_asymmetry():
    spec = KernelSpec(KernelVariant.DIRICHLET, band=5, period=TWO_PI)
    c = 1.0
    diagonal = product_kernel([c / math.sqrt(2), c / math.sqrt(2)], spec)
    axis = product_kernel([c, 0.0], spec)

    def brute(xs):
        out = 1.0
        for x in xs:
            out *= sum(math.cos(n * x) for n in range(-5, 6)) / 11.0
        return out

    brute_diag = brute([c / math.sqrt(2)] * 2)
    brute_axis = brute([c, 0.0])
    gap = abs(diagonal - axis)
    passed = (
        gap > 10 * 1e-12
        and abs(diagonal - brute_diag) < 1e-12
        and abs(axis - brute_axis) < 1e-12
    )
    report(
        "criterion 10 (product-kernel diagonal vs axis asymmetry)",
        passed,
        f"|diagonal - axis| = {gap:.4f} (> 1e-11); both match brute force within 1e-12",
    )


def test_11_convergence_in_embed_dim():
    details = []
    passed = True
    for sampler, label in ((UNIFORM, "dirichlet"), (NORMAL, "gaussian")):
        medians = {}
        for d in (64, 512):
            devs = []
            for s in range(5):
                cfg = ProfileConfig(
                    embed_dim=d,
                    replicates=100,
                    sampler=sampler,
                    domain=ANGLES,
                    grid=default_grid(TWO_PI, 257),
                    master_seed=derive_seed(777, d, s),
                )
                devs.append(profile_report(empirical_profile(cfg)).max_abs_deviation)
            medians[d] = float(np.median(devs))
        details.append(f"{label}: median d=64 {medians[64]:.4f} -> d=512 {medians[512]:.4f}")
        passed = passed and medians[512] < medians[64]
    report(
        "criterion 11 (deviation shrinks from d=64 to d=512 at N=100)",
        passed,
        "; ".join(details),
    )
