"""Cross-backend equivalence: the compiled core and the NumPy fallback
implement the same contracts and must agree numerically."""

import os
import subprocess
import sys

import numpy as np
import pytest

from cycssp import PeriodicDomain, SamplerSpec, SamplerVariant, sample_phase_matrix
from cycssp import _purecore

_fastcore = pytest.importorskip("cycssp._fastcore")

TWO_PI = 2.0 * np.pi


@pytest.mark.parametrize("d,n", [(16, 1), (33, 2), (100, 1), (257, 3)])
def test_encode_many_agrees(d, n):
    pm = sample_phase_matrix(
        d, PeriodicDomain(n, TWO_PI), SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5), seed=d
    )
    xs = np.random.default_rng(d).uniform(-10, 10, size=(23, n))
    pure = _purecore.encode_many(pm.index_matrix, xs, TWO_PI)
    fast = _fastcore.encode_many(pm.index_matrix, xs, TWO_PI)
    assert np.max(np.abs(pure - fast)) < 1e-10


@pytest.mark.parametrize("d", [8, 64, 257])
def test_circular_convolve_agrees(d):
    rng = np.random.default_rng(d)
    a = rng.normal(size=d)
    b = rng.normal(size=d)
    pure = _purecore.circular_convolve(a, b)
    fast = _fastcore.circular_convolve(a, b)
    assert np.max(np.abs(pure - fast)) < 1e-10


def test_both_reject_asymmetric_matrices():
    pm = sample_phase_matrix(
        16, PeriodicDomain(1, TWO_PI), SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5), seed=2
    )
    idx = np.array(pm.index_matrix)
    idx[1, 0] = 5
    idx[15, 0] = 5
    xs = np.array([[0.4]])
    for mod in (_purecore, _fastcore):
        with pytest.raises(ValueError, match="conjugate"):
            mod.encode_many(idx, xs, TWO_PI)


def test_convolve_matches_direct_definition():
    rng = np.random.default_rng(9)
    a = rng.normal(size=12)
    b = rng.normal(size=12)
    direct = np.array([sum(a[i] * b[(m - i) % 12] for i in range(12)) for m in range(12)])
    assert np.allclose(_purecore.circular_convolve(a, b), direct, atol=1e-12)
    assert np.allclose(_fastcore.circular_convolve(a, b), direct, atol=1e-12)


def _active_backend_under(env_value):
    env = dict(os.environ, CYCSSP_BACKEND=env_value)
    out = subprocess.run(
        [sys.executable, "-c", "import cycssp; print(cycssp.ACTIVE_BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    return out


def test_backend_env_override():
    assert _active_backend_under("pure").stdout.strip() == "pure"
    assert _active_backend_under("compiled").stdout.strip() == "compiled"


def test_backend_env_rejects_unknown():
    out = _active_backend_under("turbo")
    assert out.returncode != 0
    assert "CYCSSP_BACKEND" in out.stderr


def test_forced_backends_give_same_checks():
    code = (
        "import cycssp; import sys; "
        "sys.exit(0 if all(r.passed for r in cycssp.run_checks(seed=3)) else 1)"
    )
    for mode in ("pure", "compiled"):
        env = dict(os.environ, CYCSSP_BACKEND=mode)
        assert subprocess.run([sys.executable, "-c", code], env=env).returncode == 0
