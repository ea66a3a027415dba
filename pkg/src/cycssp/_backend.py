"""Backend selection for the hot transform kernels.

Two interchangeable implementations exist: a compiled direct transform
(``cycssp._fastcore``, Cython) and a pure NumPy/FFT path
(``cycssp._purecore``).  Benchmarking (``benchmarks/bench_backends.py``)
shows the direct transform wins on small, latency-bound calls while the
FFT route wins on batched work, where its d*log(d) scaling dominates; the
default mode therefore dispatches per call on problem size.

``CYCSSP_BACKEND`` overrides the choice: ``pure`` always uses NumPy,
``compiled`` always uses the extension (ImportError if it is missing),
``auto`` (default) dispatches by size and falls back to NumPy when the
extension is unavailable.  Both backends satisfy identical contracts and
agree numerically far below every documented tolerance; results are
deterministic within a fixed backend choice.
"""

from __future__ import annotations

import os

from . import _purecore

_requested = os.environ.get("CYCSSP_BACKEND", "auto").strip().lower() or "auto"
if _requested not in ("auto", "compiled", "pure"):
    raise ImportError(
        f"CYCSSP_BACKEND must be 'auto', 'compiled' or 'pure', got {_requested!r}"
    )

_fastcore = None
if _requested != "pure":
    try:
        from . import _fastcore  # type: ignore[attr-defined, no-redef]
    except ImportError:
        if _requested == "compiled":
            raise

HAVE_COMPILED = _fastcore is not None

if _requested == "auto":
    ACTIVE_BACKEND = "auto" if HAVE_COMPILED else "pure"
else:
    ACTIVE_BACKEND = _requested

# Crossover sizes measured with benchmarks/bench_backends.py: the direct
# transform costs ~points*d**2 while the FFT route is ~constant overhead
# plus points*d*log(d).
_ENCODE_DIRECT_MAX_WORK = 12_000  # points * d**2
_CONVOLVE_DIRECT_MAX_DIM = 96


def encode_many(index_matrix, xs, period, imag_tol=1e-10):
    if ACTIVE_BACKEND == "compiled":
        return _fastcore.encode_many(index_matrix, xs, period, imag_tol)
    if (
        ACTIVE_BACKEND == "auto"
        and xs.shape[0] * index_matrix.shape[0] ** 2 <= _ENCODE_DIRECT_MAX_WORK
    ):
        return _fastcore.encode_many(index_matrix, xs, period, imag_tol)
    return _purecore.encode_many(index_matrix, xs, period, imag_tol)


def circular_convolve(a, b):
    if ACTIVE_BACKEND == "compiled":
        return _fastcore.circular_convolve(a, b)
    if ACTIVE_BACKEND == "auto" and a.shape[0] <= _CONVOLVE_DIRECT_MAX_DIM:
        return _fastcore.circular_convolve(a, b)
    return _purecore.circular_convolve(a, b)
