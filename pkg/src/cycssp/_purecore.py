"""Pure NumPy implementation of the hot transform kernels.

This is the fallback backend: same contracts as ``cycssp._fastcore`` but
built on ``numpy.fft``.  Selected automatically when the compiled extension
is unavailable, or explicitly via ``CYCSSP_BACKEND=pure``.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def encode_many(index_matrix, xs, period, imag_tol=1e-10):
    """Embed each row of ``xs`` via the inverse DFT of its unit phasors.

    ``index_matrix`` is the (d, n) integer matrix, ``xs`` an (P, n) float
    array.  Returns a (P, d) float array of real embeddings under the 1/d
    inverse-transform convention.  Raises ValueError if any imaginary
    residual exceeds ``imag_tol``: conjugate symmetry makes the result real
    analytically, so a larger residual means a broken phase matrix.
    """
    index_matrix = np.asarray(index_matrix)
    xs = np.asarray(xs, dtype=np.float64)
    phases = (TWO_PI / period) * (xs @ index_matrix.T.astype(np.float64))
    emb = np.fft.ifft(np.exp(1j * phases), axis=1)
    residual = float(np.max(np.abs(emb.imag))) if emb.size else 0.0
    if residual > imag_tol:
        raise ValueError(
            f"imaginary residual {residual:.3e} exceeds {imag_tol:.1e}; "
            "phase matrix is not conjugate symmetric"
        )
    return np.ascontiguousarray(emb.real)


def circular_convolve(a, b):
    """Circular convolution of two real vectors of equal length."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    d = a.shape[0]
    return np.fft.irfft(np.fft.rfft(a) * np.fft.rfft(b), n=d)
