"""Seeded sampling of conjugate-symmetric integer phase matrices.

Frequency indices are drawn i.i.d. per free Fourier slot from a discrete
distribution over {-B, ..., B}: either the uniform band or a discrete
pseudo-normal obtained by evaluating a centred Gaussian at the admissible
frequencies and normalizing.

Reproducibility scheme
----------------------
All randomness flows through counter-based Philox generators keyed by
``numpy.random.SeedSequence``.  Column ``j`` of a matrix draws from the
stream ``SeedSequence(seed, spawn_key=(j,))``, so the result is independent
of iteration order and safe to parallelize, and :func:`derive_seed` produces
the child seeds (for example one per Monte-Carlo replicate) from a master
seed with the same mechanism.  Identical arguments always give identical
matrices, across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import (
    TWO_PI,
    PeriodicDomain,
    PhaseMatrix,
    SamplerSpec,
    SamplerVariant,
    validate_phase_matrix,
)

#: Probabilities of a PMF must sum to one within this tolerance.
PMF_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DiscretePmf:
    """Probability mass over the integer frequency indices -B..B."""

    indices: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self):
        idx = np.ascontiguousarray(self.indices, dtype=np.int64)
        p = np.ascontiguousarray(self.probabilities, dtype=np.float64)
        if idx.shape != p.shape or idx.ndim != 1:
            raise ValueError("indices and probabilities must be matching vectors")
        band = (idx.shape[0] - 1) // 2
        if not np.array_equal(idx, np.arange(-band, band + 1)):
            raise ValueError("indices must be the contiguous range -B..B")
        if np.any(p < 0):
            raise ValueError("probabilities must be nonnegative")
        if abs(float(p.sum()) - 1.0) > PMF_SUM_TOL:
            raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
        if not np.array_equal(p, p[::-1]):
            raise ValueError("PMF must be symmetric: p[n] == p[-n]")
        idx.setflags(write=False)
        p.setflags(write=False)
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "probabilities", p)

    @property
    def band(self) -> int:
        return (self.indices.shape[0] - 1) // 2

    def cosine_transform(self, x, period: float):
        """Induced similarity kernel: sum_n p[n] * cos(2*pi*n*x/period).

        This is the Fourier dual of the PMF and must coincide with the
        analytic kernel of the matching sampler variant.
        """
        x = np.asarray(x, dtype=np.float64)
        angles = np.multiply.outer(x, TWO_PI * self.indices / period)
        out = np.cos(angles) @ self.probabilities
        return float(out) if x.ndim == 0 else out


def uniform_pmf(band: int) -> DiscretePmf:
    """Uniform PMF over {-band, ..., band}: every index has mass 1/(2B+1)."""
    if int(band) != band or band < 1:
        raise ValueError(f"band must be a positive integer, got {band}")
    size = 2 * band + 1
    return DiscretePmf(np.arange(-band, band + 1), np.full(size, 1.0 / size))


def discrete_normal_pmf(band: int, sigma: float, period: float) -> DiscretePmf:
    """Discrete pseudo-normal PMF over {-band, ..., band}.

    Mass is proportional to the centred Gaussian density with variance
    sigma**2 evaluated at the admissible frequencies 2*pi*n/period; the
    density's constant prefactor cancels in the normalization, so only
    ``exp(-omega**2 / (2 sigma**2))`` is evaluated.
    """
    if int(band) != band or band < 1:
        raise ValueError(f"band must be a positive integer, got {band}")
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if not period > 0:
        raise ValueError(f"period must be positive, got {period}")
    n = np.arange(-band, band + 1)
    omega = TWO_PI * n / period
    weights = np.exp(-(omega**2) / (2.0 * sigma**2))
    return DiscretePmf(n, weights / weights.sum())


def pmf_for_sampler(sampler: SamplerSpec, period: float) -> DiscretePmf:
    """The PMF a sampler spec draws from."""
    if sampler.variant is SamplerVariant.UNIFORM_BAND:
        return uniform_pmf(sampler.band)
    return discrete_normal_pmf(sampler.band, sampler.sigma, period)


def derive_seed(master_seed: int, *path: int) -> int:
    """Derive a child 64-bit seed from a master seed.

    Children are spawned as ``SeedSequence(master_seed, spawn_key=path)``,
    the documented splittable scheme of NumPy's counter-based generators;
    distinct paths give statistically independent streams and the mapping is
    stable across processes and platforms.
    """
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(int(p) for p in path))
    return int(ss.generate_state(1, np.uint64)[0])


def _column_rng(seed: int, column: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(column,))))


def sample_phase_matrix(
    embed_dim: int,
    domain: PeriodicDomain,
    sampler: SamplerSpec,
    seed: int,
) -> PhaseMatrix:
    """Draw a conjugate-symmetric phase matrix deterministically from a seed.

    For each feature column, ``(embed_dim - 1) // 2`` indices are drawn
    i.i.d. from the sampler's PMF by inverse CDF over the 2B+1 support
    points and placed in rows 1..(d-1)//2; the conjugate rows receive the
    negated mirror, and the DC row (plus the Nyquist row when ``embed_dim``
    is even) stays zero.
    """
    if int(embed_dim) != embed_dim or embed_dim < 3:
        raise ValueError(
            f"embed_dim must be an integer >= 3 (DC slot plus one conjugate pair), got {embed_dim}"
        )
    pmf = pmf_for_sampler(sampler, domain.period)
    cdf = np.cumsum(pmf.probabilities)
    top = pmf.indices.shape[0] - 1
    half = (embed_dim - 1) // 2

    idx = np.zeros((embed_dim, domain.n), dtype=np.int64)
    for j in range(domain.n):
        u = _column_rng(seed, j).random(half)
        drawn = pmf.indices[np.minimum(np.searchsorted(cdf, u, side="right"), top)]
        idx[1 : half + 1, j] = drawn
        idx[embed_dim - half :, j] = -drawn[::-1]

    pm = PhaseMatrix(
        embed_dim=embed_dim, domain=domain, sampler=sampler, seed=int(seed), index_matrix=idx
    )
    result = validate_phase_matrix(pm)
    if not result:  # pragma: no cover - construction guarantees validity
        raise AssertionError("sampled matrix failed validation: " + "; ".join(result.violations))
    return pm
