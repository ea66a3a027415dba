"""Core types for cyclic (periodic) spatial semantic pointer embeddings.

A cyclic embedding is built from a conjugate-symmetric phase matrix whose
entries are exact integer multiples of the fundamental frequency 2*pi/period.
The integers are what this module stores: keeping the frequency *indices*
rather than floating-point radians makes the period of the embedding exact,
with no drift after any whole number of wraps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

TWO_PI = 2.0 * np.pi

#: Embeddings are unit length by construction (Parseval); this is the
#: tolerance to which the invariant is enforced.
UNIT_NORM_TOL = 1e-9


class SamplerVariant(str, Enum):
    """Which discrete frequency distribution fills the phase matrix."""

    UNIFORM_BAND = "uniform_band"
    DISCRETE_NORMAL = "discrete_normal"


@dataclass(frozen=True)
class PeriodicDomain:
    """Feature space with ``n`` axes, each wrapping after ``period`` units."""

    n: int
    period: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"feature dimensionality n must be a positive integer, got {self.n}")
        if not self.period > 0:
            raise ValueError(f"period must be positive, got {self.period}")


@dataclass(frozen=True)
class SamplerSpec:
    """Parameters of the integer frequency-index distribution.

    ``band`` is the inclusive bound B: indices are drawn from {-B, ..., B}.
    ``sigma`` is the shape parameter of the discrete normal variant and must
    be omitted for the uniform band.
    """

    variant: SamplerVariant
    band: int
    sigma: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", SamplerVariant(self.variant))
        if int(self.band) != self.band or self.band < 1:
            raise ValueError(f"band must be a positive integer, got {self.band}")
        if self.variant is SamplerVariant.DISCRETE_NORMAL:
            if self.sigma is None or not self.sigma > 0:
                raise ValueError(f"discrete normal sampler needs sigma > 0, got {self.sigma}")
        elif self.sigma is not None:
            raise ValueError("uniform band sampler takes no sigma")


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PhaseMatrix:
    """Conjugate-symmetric matrix of integer frequency indices.

    Entry ``m[k, j]`` encodes the frequency ``2*pi*m[k, j] / period`` applied
    to input axis ``j`` in Fourier slot ``k``.  Row 0 (the DC slot) is all
    zeros, row ``d - k`` carries the negated indices of row ``k``, and for
    even ``d`` the Nyquist row ``d // 2`` is all zeros; this is exactly the
    symmetry that makes the inverse transform of the phasors real-valued.

    Construction only checks shape coherence.  Value-level invariants are
    checked by :func:`validate_phase_matrix`, which sampling and
    deserialization run as a post-condition.
    """

    embed_dim: int
    domain: PeriodicDomain
    sampler: SamplerSpec
    seed: int
    index_matrix: np.ndarray

    def __post_init__(self):
        idx = np.asarray(self.index_matrix)
        if idx.dtype.kind not in "iu":
            raise ValueError(f"index_matrix must be integer valued, got dtype {idx.dtype}")
        idx = np.ascontiguousarray(idx, dtype=np.int64)
        if idx.shape != (self.embed_dim, self.domain.n):
            raise ValueError(
                f"index_matrix shape {idx.shape} does not match "
                f"(embed_dim, n) = ({self.embed_dim}, {self.domain.n})"
            )
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        object.__setattr__(self, "index_matrix", _readonly(idx))

    def __eq__(self, other):
        if not isinstance(other, PhaseMatrix):
            return NotImplemented
        return (
            self.embed_dim == other.embed_dim
            and self.domain == other.domain
            and self.sampler == other.sampler
            and self.seed == other.seed
            and np.array_equal(self.index_matrix, other.index_matrix)
        )

    def frequencies(self) -> np.ndarray:
        """The phase matrix in radians per input unit, ``2*pi*m/period``."""
        return TWO_PI * self.index_matrix / self.domain.period

    def to_json(self) -> str:
        """Serialize to the canonical JSON document (integers exact)."""
        sampler: dict = {"variant": self.sampler.variant.value, "band": int(self.sampler.band)}
        if self.sampler.sigma is not None:
            sampler["sigma"] = float(self.sampler.sigma)
        doc = {
            "embed_dim": int(self.embed_dim),
            "n": int(self.domain.n),
            "period": float(self.domain.period),
            "sampler": sampler,
            "seed": int(self.seed),
            "index_matrix": [[int(v) for v in row] for row in self.index_matrix],
        }
        return json.dumps(doc, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PhaseMatrix":
        """Parse and validate a canonical JSON document.

        Raises ValueError if the document is malformed or the matrix violates
        any invariant.
        """
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not a valid phase matrix document: {exc}") from exc
        try:
            sampler = SamplerSpec(
                variant=SamplerVariant(doc["sampler"]["variant"]),
                band=doc["sampler"]["band"],
                sigma=doc["sampler"].get("sigma"),
            )
            pm = cls(
                embed_dim=doc["embed_dim"],
                domain=PeriodicDomain(n=doc["n"], period=doc["period"]),
                sampler=sampler,
                seed=doc["seed"],
                index_matrix=np.asarray(doc["index_matrix"], dtype=np.int64),
            )
        except KeyError as exc:
            raise ValueError(f"phase matrix document is missing field {exc}") from exc
        result = validate_phase_matrix(pm)
        if not result:
            raise ValueError("invalid phase matrix: " + "; ".join(result.violations))
        return pm


@dataclass(frozen=True)
class PhaseMatrixValidation:
    """Outcome of :func:`validate_phase_matrix`; truthy when valid."""

    violations: tuple[str, ...]

    def __bool__(self):
        return not self.violations

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_phase_matrix(pm: PhaseMatrix) -> PhaseMatrixValidation:
    """Check every PhaseMatrix invariant, collecting diagnostics.

    Returns a truthy result iff the matrix is valid; otherwise the result
    carries one message per violated invariant.
    """
    d = pm.embed_dim
    idx = pm.index_matrix
    band = pm.sampler.band
    violations = []
    if d < 3:
        violations.append(f"embed_dim must be at least 3 (DC slot plus one conjugate pair), got {d}")
    if np.any(np.abs(idx) > band):
        worst = int(np.max(np.abs(idx)))
        violations.append(f"band exceeded: |index| up to {worst} with band {band}")
    if d >= 1 and np.any(idx[0] != 0):
        violations.append("DC slot nonzero: row 0 must be all zeros")
    if d >= 2 and d % 2 == 0 and np.any(idx[d // 2] != 0):
        violations.append(f"Nyquist slot nonzero: row {d // 2} must be all zeros for even embed_dim")
    if d >= 2 and not np.array_equal(idx[1:][::-1], -idx[1:]):
        violations.append("conjugate symmetry broken: row d-k must negate row k")
    return PhaseMatrixValidation(tuple(violations))


@dataclass(frozen=True, eq=False)
class Embedding:
    """Real unit-norm vector representing one point of the feature space."""

    values: np.ndarray

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.float64)
        if v.ndim != 1:
            raise ValueError(f"embedding values must be a vector, got shape {v.shape}")
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > UNIT_NORM_TOL:
            raise ValueError(f"embedding norm {norm!r} departs from 1 by more than {UNIT_NORM_TOL:g}")
        object.__setattr__(self, "values", _readonly(v))

    @property
    def embed_dim(self) -> int:
        return self.values.shape[0]

    def __len__(self):
        return self.values.shape[0]


@dataclass(frozen=True, eq=False)
class KernelProfile:
    """Displacement grid with analytic kernel values and Monte-Carlo statistics."""

    displacements: np.ndarray
    analytic: np.ndarray
    empirical_mean: np.ndarray
    empirical_std: np.ndarray
    replicates: int

    def __post_init__(self):
        arrays = {}
        for name in ("displacements", "analytic", "empirical_mean", "empirical_std"):
            arrays[name] = np.ascontiguousarray(getattr(self, name), dtype=np.float64)
        lengths = {a.shape for a in arrays.values()}
        if len(lengths) != 1 or arrays["displacements"].ndim != 1:
            raise ValueError(f"profile vectors must share one length, got shapes {sorted(lengths)}")
        if np.any(arrays["empirical_std"] < 0):
            raise ValueError("empirical_std entries must be nonnegative")
        if int(self.replicates) != self.replicates or self.replicates < 1:
            raise ValueError(f"replicates must be a positive integer, got {self.replicates}")
        for name, a in arrays.items():
            object.__setattr__(self, name, _readonly(a))
