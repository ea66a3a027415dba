"""Cyclic spatial semantic pointer embeddings.

Real-valued, unit-norm, exactly periodic embeddings of scalars and vectors,
built as inverse transforms of unit phasors whose frequencies are integer
multiples of a fundamental period.  Similarities follow the normalized
Dirichlet kernel under uniform frequency sampling and a periodic Gaussian
kernel (theta-function closed form) under discrete normal sampling.
"""

from ._backend import ACTIVE_BACKEND
from .domain import (
    Embedding,
    KernelProfile,
    PeriodicDomain,
    PhaseMatrix,
    PhaseMatrixValidation,
    SamplerSpec,
    SamplerVariant,
    validate_phase_matrix,
)
from .encoder import bind, encode, encode_many, involution, similarity, unbind
from .kernels import (
    KernelSpec,
    KernelVariant,
    analytic_kernel,
    dirichlet_kernel,
    periodic_gaussian_kernel,
    periodic_gaussian_theta,
    product_kernel,
    theta,
)
from .sampling import (
    DiscretePmf,
    derive_seed,
    discrete_normal_pmf,
    pmf_for_sampler,
    sample_phase_matrix,
    uniform_pmf,
)
from .verification import (
    CheckResult,
    ProfileConfig,
    ProfileReport,
    default_grid,
    empirical_profile,
    profile_report,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_BACKEND",
    "CheckResult",
    "DiscretePmf",
    "Embedding",
    "KernelProfile",
    "KernelSpec",
    "KernelVariant",
    "PeriodicDomain",
    "PhaseMatrix",
    "PhaseMatrixValidation",
    "ProfileConfig",
    "ProfileReport",
    "SamplerSpec",
    "SamplerVariant",
    "analytic_kernel",
    "bind",
    "default_grid",
    "derive_seed",
    "dirichlet_kernel",
    "discrete_normal_pmf",
    "empirical_profile",
    "encode",
    "encode_many",
    "involution",
    "periodic_gaussian_kernel",
    "periodic_gaussian_theta",
    "pmf_for_sampler",
    "product_kernel",
    "profile_report",
    "run_checks",
    "sample_phase_matrix",
    "similarity",
    "theta",
    "unbind",
    "uniform_pmf",
    "validate_phase_matrix",
    "__version__",
]
