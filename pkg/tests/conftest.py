import numpy as np
import pytest

from cycssp import PeriodicDomain, SamplerSpec, SamplerVariant, sample_phase_matrix

TWO_PI = 2.0 * np.pi


@pytest.fixture
def angle_domain():
    return PeriodicDomain(n=1, period=TWO_PI)


@pytest.fixture
def uniform_sampler():
    return SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5)


@pytest.fixture
def normal_sampler():
    return SamplerSpec(SamplerVariant.DISCRETE_NORMAL, band=5, sigma=1.0)


@pytest.fixture
def small_matrix(angle_domain, uniform_sampler):
    return sample_phase_matrix(32, angle_domain, uniform_sampler, seed=7)
