import numpy as np
import pytest

from cycssp import (
    KernelProfile,
    PeriodicDomain,
    PhaseMatrix,
    SamplerSpec,
    SamplerVariant,
    default_grid,
    derive_seed,
    empirical_profile,
    profile_report,
    run_checks,
)
from cycssp.verification import ProfileConfig

TWO_PI = 2.0 * np.pi


def small_config(**overrides):
    base = dict(
        embed_dim=32,
        replicates=8,
        sampler=SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5),
        domain=PeriodicDomain(1, TWO_PI),
        grid=default_grid(TWO_PI, 33),
        master_seed=5,
    )
    base.update(overrides)
    return ProfileConfig(**base)


class TestProfileConfig:
    def test_rejects_zero_replicates(self):
        with pytest.raises(ValueError, match="replicates"):
            small_config(replicates=0)

    def test_rejects_empty_grid(self):
        with pytest.raises(ValueError, match="grid"):
            small_config(grid=np.array([]))

    def test_rejects_unsorted_grid(self):
        with pytest.raises(ValueError, match="ascending"):
            small_config(grid=np.array([0.0, -1.0, 1.0]))


class TestEmpiricalProfile:
    def test_origin_statistics_are_exact(self):
        profile = empirical_profile(small_config())
        i0 = int(np.argmin(np.abs(profile.displacements)))
        assert profile.displacements[i0] == 0.0
        assert profile.empirical_mean[i0] == 1.0
        assert profile.empirical_std[i0] == 0.0

    def test_deterministic(self):
        a = empirical_profile(small_config())
        b = empirical_profile(small_config())
        assert np.array_equal(a.empirical_mean, b.empirical_mean)
        assert np.array_equal(a.empirical_std, b.empirical_std)

    def test_single_replicate_deterministic(self):
        a = empirical_profile(small_config(replicates=1))
        b = empirical_profile(small_config(replicates=1))
        assert np.array_equal(a.empirical_mean, b.empirical_mean)
        assert np.all(a.empirical_std == 0.0)

    def test_master_seed_changes_profile(self):
        a = empirical_profile(small_config())
        b = empirical_profile(small_config(master_seed=6))
        assert not np.array_equal(a.empirical_mean, b.empirical_mean)

    def test_analytic_column_matches_sampler(self):
        from cycssp import analytic_kernel

        cfg = small_config(sampler=SamplerSpec(SamplerVariant.DISCRETE_NORMAL, band=5, sigma=1.0))
        profile = empirical_profile(cfg)
        expected = analytic_kernel(cfg.sampler, cfg.grid, cfg.domain.period)
        assert np.array_equal(profile.analytic, expected)

    def test_multiaxis_domain_displaces_first_axis(self):
        cfg = small_config(domain=PeriodicDomain(2, TWO_PI))
        profile = empirical_profile(cfg)
        # analytic curve is the 1-D kernel: the remaining axis contributes 1
        assert profile.empirical_mean.shape == cfg.grid.shape
        assert profile_report(profile).max_abs_deviation < 0.5

    def test_mean_matches_pinned_slot_expectation(self):
        # E[similarity] = (c + 2h k(x)) / d with c pinned slots (DC+Nyquist)
        # and h sampled pairs; the residual is pure Monte-Carlo noise, far
        # smaller than the raw deviation from the kernel itself.
        cfg = small_config(embed_dim=100, replicates=500, grid=default_grid(TWO_PI, 65), master_seed=11)
        profile = empirical_profile(cfg)
        k = profile.analytic
        biased = (2 + 2 * 49 * k) / 100
        assert np.max(np.abs(profile.empirical_mean - biased)) < 0.015
        assert np.max(np.abs(profile.empirical_mean - k)) > 0.015


class TestProfileReport:
    def test_zero_deviation(self):
        grid = np.linspace(-1, 1, 5)
        profile = KernelProfile(grid, np.ones(5), np.ones(5), np.zeros(5), replicates=3)
        report = profile_report(profile)
        assert report.max_abs_deviation == 0.0
        assert report.mean_abs_deviation == 0.0

    def test_locates_worst_point(self):
        grid = np.linspace(-1, 1, 5)
        empirical = np.ones(5)
        empirical[3] = 0.75
        profile = KernelProfile(grid, np.ones(5), empirical, np.zeros(5), replicates=3)
        report = profile_report(profile)
        assert report.max_abs_deviation == pytest.approx(0.25)
        assert report.worst_displacement == grid[3]
        assert report.mean_abs_deviation == pytest.approx(0.05)


class TestConvergence:
    def test_deviation_shrinks_with_replicates(self):
        # medians of 5 runs at N = 10, 100, 1000 must be non-increasing
        meds = []
        for n in (10, 100, 1000):
            devs = [
                profile_report(
                    empirical_profile(
                        small_config(
                            embed_dim=100,
                            replicates=n,
                            grid=default_grid(TWO_PI, 129),
                            master_seed=derive_seed(555, n, s),
                        )
                    )
                ).max_abs_deviation
                for s in range(5)
            ]
            meds.append(float(np.median(devs)))
        assert meds[0] >= meds[1] >= meds[2]


class TestRunChecks:
    def test_all_pass_on_fresh_build(self):
        results = run_checks(seed=13)
        assert all(r.passed for r in results), [r for r in results if not r.passed]
        names = [r.name for r in results]
        assert "phase-matrix-validity" in names
        assert "binding-homomorphism" in names

    def test_corrupted_sampler_fails_validity_check(self):
        def corrupt(embed_dim, domain, sampler, seed):
            idx = np.zeros((embed_dim, domain.n), dtype=np.int64)
            idx[1, :] = 3
            idx[embed_dim - 1, :] = 3  # pairing broken
            return PhaseMatrix(embed_dim, domain, sampler, seed, idx)

        results = run_checks(seed=13, sample_fn=corrupt)
        validity = next(r for r in results if r.name == "phase-matrix-validity")
        assert not validity.passed
        assert "conjugate" in validity.detail

    def test_seed_independence(self):
        for seed in (123, 456):
            assert all(r.passed for r in run_checks(seed=seed))
