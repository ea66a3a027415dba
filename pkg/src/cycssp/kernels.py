"""Closed-form similarity kernels induced by the frequency samplers.

Both kernels are cosine transforms of the sampler's PMF over the integer
frequency indices -B..B, hence shift invariant and positive definite
(Bochner).  The uniform band induces the normalized Dirichlet kernel, with
an equivalent sine-ratio closed form; Gaussian index weights induce the
periodic Gaussian kernel, whose large-band limit is a ratio of theta
functions.  Multidimensional kernels are per-axis products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .domain import TWO_PI, SamplerSpec, SamplerVariant

#: Switch the Dirichlet sine-ratio to the cosine sum when |sin(theta/2)| is
#: below this bound; the ratio is 0/0 at the lattice points.
RATIO_GUARD = 1e-8

#: Truncate the theta series once tau**(i*i) drops below TAIL_EPS*(1 - tau),
#: which bounds the dropped tail by TAIL_EPS * tau < 1e-15 for tau <= 0.999.
THETA_TAIL_EPS = 1e-16

#: Past this nome the theta series converges too slowly to be worthwhile;
#: the periodic Gaussian falls back to its banded cosine sum.
THETA_NOME_MAX = 0.999

_ieee_remainder = np.frompyfunc(math.remainder, 2, 1)


class KernelVariant(str, Enum):
    DIRICHLET = "dirichlet"
    PERIODIC_GAUSSIAN = "periodic_gaussian"


@dataclass(frozen=True)
class KernelSpec:
    """Analytic kernel parameters; mirrors the sampler constraints."""

    variant: KernelVariant
    band: int
    period: float
    sigma: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", KernelVariant(self.variant))
        if int(self.band) != self.band or self.band < 1:
            raise ValueError(f"band must be a positive integer, got {self.band}")
        if not self.period > 0:
            raise ValueError(f"period must be positive, got {self.period}")
        if self.variant is KernelVariant.PERIODIC_GAUSSIAN:
            if self.sigma is None or not self.sigma > 0:
                raise ValueError(f"periodic Gaussian kernel needs sigma > 0, got {self.sigma}")
        elif self.sigma is not None:
            raise ValueError("Dirichlet kernel takes no sigma")

    @classmethod
    def for_sampler(cls, sampler: SamplerSpec, period: float) -> "KernelSpec":
        """The kernel a sampler's embeddings converge to in expectation."""
        if sampler.variant is SamplerVariant.UNIFORM_BAND:
            return cls(KernelVariant.DIRICHLET, sampler.band, period)
        return cls(KernelVariant.PERIODIC_GAUSSIAN, sampler.band, period, sampler.sigma)

    def evaluate(self, x):
        if self.variant is KernelVariant.DIRICHLET:
            return dirichlet_kernel(x, self.band, self.period)
        return periodic_gaussian_kernel(x, self.band, self.sigma, self.period)


def _as_float_array(x):
    a = np.asarray(x, dtype=np.float64)
    return a, a.ndim == 0


def dirichlet_kernel(x, band: int, period: float, form: str = "auto"):
    """Normalized Dirichlet kernel with the given period.

    The defining cosine sum is ``sum(cos(2*pi*n*x/period) for n in -B..B)
    divided by 2B+1``; it equals the ratio
    ``sin((2B+1)*t/2) / ((2B+1)*sin(t/2))`` with ``t = 2*pi*x/period``, with
    limit value 1 at the lattice points ``t = 0 (mod 2*pi)``.

    ``form`` selects the evaluation path: ``"sum"`` for the cosine sum,
    ``"ratio"`` for the closed ratio (guarded near its removable
    singularities), or ``"auto"`` for the ratio with the guard.
    Accepts scalars or arrays.
    """
    if int(band) != band or band < 1:
        raise ValueError(f"band must be a positive integer, got {band}")
    if not period > 0:
        raise ValueError(f"period must be positive, got {period}")
    if form not in ("auto", "sum", "ratio"):
        raise ValueError(f"form must be 'auto', 'sum' or 'ratio', got {form!r}")
    x, scalar = _as_float_array(x)
    if form == "sum":
        out = _dirichlet_sum(x, band, period)
    else:
        out = _dirichlet_ratio(x, band, period)
    return float(out) if scalar else out


def _dirichlet_sum(x, band, period):
    n = np.arange(-band, band + 1)
    angles = np.multiply.outer(x, TWO_PI * n / period)
    return np.cos(angles).sum(axis=-1) / (2 * band + 1)


def _dirichlet_ratio(x, band, period):
    # Reduce to half-angle in [-pi/2, pi/2] via the exact IEEE remainder so
    # the denominator sine keeps full relative accuracy near the lattice.
    half = np.pi * np.asarray(_ieee_remainder(x, period), dtype=np.float64) / period
    sin_half = np.sin(half)
    near = np.abs(sin_half) < RATIO_GUARD
    safe = np.where(near, 1.0, sin_half)
    m = 2 * band + 1
    out = np.sin(m * half) / (m * safe)
    if np.any(near):
        out = np.where(near, _dirichlet_sum(np.asarray(x, dtype=np.float64), band, period), out)
    return out


def periodic_gaussian_kernel(x, band: int, sigma: float, period: float):
    """Periodic Gaussian kernel: Gaussian-weighted cosine sum over -B..B.

    The weight of harmonic ``n`` is ``exp(-omega_n**2 / (2*sigma**2))`` at
    ``omega_n = 2*pi*n/period``; the sum is normalized by the total weight so
    the kernel is 1 at zero displacement.  Accepts scalars or arrays.
    """
    if int(band) != band or band < 1:
        raise ValueError(f"band must be a positive integer, got {band}")
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if not period > 0:
        raise ValueError(f"period must be positive, got {period}")
    x, scalar = _as_float_array(x)
    n = np.arange(-band, band + 1)
    omega = TWO_PI * n / period
    weights = np.exp(-(omega**2) / (2.0 * sigma**2))
    out = np.cos(np.multiply.outer(x, omega)) @ weights / weights.sum()
    return float(out) if scalar else out


def _theta_auto_truncation(tau: float) -> int:
    if tau == 0.0:
        return 1
    target = THETA_TAIL_EPS * (1.0 - tau)
    trunc = math.ceil(math.sqrt(math.log(target) / math.log(tau)))
    if trunc > 100_000:
        raise ValueError(
            f"tau={tau!r} is too close to 1 for the series; pass an explicit truncation "
            "or evaluate the banded cosine sum instead"
        )
    return max(trunc, 1)


def theta(z, tau: float, truncation: int | None = None):
    """Theta function ``1 + 2*sum(tau**(i*i) * cos(2*i*z) for i >= 1)``.

    With ``truncation=None`` the series stops once ``tau**(i*i)`` falls below
    ``1e-16 * (1 - tau)``, leaving an absolute tail under 1e-15 for
    ``tau <= 0.999``.  Accepts scalars or arrays in ``z``; ``tau`` must lie
    in [0, 1).
    """
    if not 0.0 <= tau < 1.0:
        raise ValueError(f"tau must lie in [0, 1), got {tau}")
    if truncation is None:
        truncation = _theta_auto_truncation(tau)
    elif int(truncation) != truncation or truncation < 1:
        raise ValueError(f"truncation must be a positive integer, got {truncation}")
    z, scalar = _as_float_array(z)
    i = np.arange(1, truncation + 1, dtype=np.float64)
    weights = tau ** (i * i)
    out = 1.0 + 2.0 * (np.cos(2.0 * np.multiply.outer(z, i)) @ weights)
    return float(out) if scalar else out


def periodic_gaussian_theta(x, sigma: float, period: float):
    """Closed form of the periodic Gaussian kernel as a theta-function ratio.

    The nome is ``tau = exp(-(2*pi/period)**2 / (2*sigma**2))``, i.e. the
    Gaussian weight of the first harmonic, so that ``tau**(n*n)`` reproduces
    the weight of harmonic ``n`` and the ratio
    ``theta(pi*x/period, tau) / theta(0, tau)`` equals the banded cosine sum
    in the large-band limit.  (A variant convention with sigma entering the
    exponent linearly instead of squared agrees only at sigma = 1; see the
    README kernel notes.)  For nomes above ``THETA_NOME_MAX`` the series
    converges too slowly and the equivalent banded sum is evaluated instead.
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if not period > 0:
        raise ValueError(f"period must be positive, got {period}")
    omega0 = TWO_PI / period
    tau = math.exp(-(omega0**2) / (2.0 * sigma**2))
    if tau > THETA_NOME_MAX:
        band = max(50, math.ceil(1.5 * sigma * period))
        return periodic_gaussian_kernel(x, band, sigma, period)
    x, scalar = _as_float_array(x)
    out = theta(np.pi * x / period, tau) / theta(0.0, tau)
    return float(out) if scalar else out


def product_kernel(xs, spec: KernelSpec) -> float:
    """Product of the 1-D kernel over the coordinates of a displacement vector."""
    xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    if xs.ndim != 1 or xs.shape[0] < 1:
        raise ValueError(f"xs must be a nonempty vector, got shape {xs.shape}")
    return float(np.prod(spec.evaluate(xs)))


def analytic_kernel(sampler: SamplerSpec, x, period: float):
    """Analytic kernel matching a sampler: Dirichlet for the uniform band,
    periodic Gaussian for the discrete normal."""
    return KernelSpec.for_sampler(sampler, period).evaluate(x)
