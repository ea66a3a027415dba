"""Encoding feature-space points as unit-norm embeddings, plus the algebra.

A point ``x`` maps to the real inverse DFT (1/d convention) of the unit
phasors ``exp(j * A_k . x)``, where the phase matrix rows ``A_k`` are exact
integer multiples of ``2*pi/period``.  Consequences used throughout:

* every embedding has unit norm (Parseval, unit-modulus spectrum);
* the dot product of two embeddings from the same matrix equals the
  cosine average ``(1/d) * sum(cos(A_k . (x - y)))``, so similarity is
  shift invariant and its expectation over sampling is the analytic kernel;
* circular convolution multiplies spectra, so binding the embeddings of
  ``x`` and ``y`` gives the embedding of ``x + y``.

The DC slot (and for even d the Nyquist slot) is pinned to frequency zero
rather than sampled, so each contributes a constant 1/d to every
similarity; the induced bias relative to the analytic kernel k is
``(c/d) * (1 - k)`` with c = 1 for odd d and c = 2 for even d.
"""

from __future__ import annotations

import numpy as np

from ._backend import circular_convolve
from ._backend import encode_many as _encode_many_raw
from .domain import Embedding, PhaseMatrix

#: Above this imaginary residual the inverse transform refuses to truncate:
#: the result is real analytically, so the phase matrix must be broken.
IMAG_RESIDUAL_TOL = 1e-10


def _as_points(pm: PhaseMatrix, xs) -> np.ndarray:
    pts = np.asarray(xs, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts[:, None] if pm.domain.n == 1 else pts[None, :]
    if pts.ndim != 2 or pts.shape[1] != pm.domain.n:
        raise ValueError(
            f"points have shape {np.shape(xs)}, expected (..., {pm.domain.n}) "
            f"for a domain with n={pm.domain.n}"
        )
    return pts


def encode_many(pm: PhaseMatrix, xs) -> np.ndarray:
    """Encode a batch of points; rows of ``xs`` are points, rows of the
    result are embeddings."""
    return _encode_many_raw(pm.index_matrix, _as_points(pm, xs), pm.domain.period, IMAG_RESIDUAL_TOL)


def encode(pm: PhaseMatrix, x) -> Embedding:
    """Encode one point (scalar allowed when the domain has n=1)."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if x.shape != (pm.domain.n,):
        raise ValueError(f"x has shape {x.shape}, expected ({pm.domain.n},)")
    return Embedding(encode_many(pm, x[None, :])[0])


def _check_dims(a: Embedding, b: Embedding):
    if a.embed_dim != b.embed_dim:
        raise ValueError(f"embedding dims differ: {a.embed_dim} vs {b.embed_dim}")


def similarity(a: Embedding, b: Embedding) -> float:
    """Euclidean dot product of two embeddings."""
    _check_dims(a, b)
    return float(a.values @ b.values)


def bind(a: Embedding, b: Embedding) -> Embedding:
    """Circular convolution; binding encodings adds their inputs."""
    _check_dims(a, b)
    return Embedding(circular_convolve(a.values, b.values))


def involution(a: Embedding) -> Embedding:
    """Index reversal of slots 1..d-1; conjugates the spectrum."""
    v = a.values
    return Embedding(np.concatenate((v[:1], v[:0:-1])))


def unbind(a: Embedding, b: Embedding) -> Embedding:
    """Undo a bind: convolve with the involution of ``b``.

    Exact inverse for unit-modulus-spectrum embeddings (every encoding is
    one), since the conjugate of a unit phasor is its reciprocal.
    """
    _check_dims(a, b)
    return bind(a, involution(b))
