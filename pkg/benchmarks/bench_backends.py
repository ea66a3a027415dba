"""Benchmark the compiled transform core against the pure NumPy fallback.

Runs the hot operations at several sizes and reports the best-of-N wall
time per call for each backend, plus the speedup of the compiled core.
The last section times a full Monte-Carlo profile (the dominant workload)
through the public API under each backend.

Usage: python benchmarks/bench_backends.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from cycssp import PeriodicDomain, SamplerSpec, SamplerVariant, sample_phase_matrix
from cycssp import _purecore

try:
    from cycssp import _fastcore
except ImportError:
    _fastcore = None


def best_time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def fmt_row(label, t_pure, t_fast):
    if t_fast is None:
        return f"{label:<38} {t_pure * 1e3:>10.3f} {'-':>10} {'-':>8}"
    return f"{label:<38} {t_pure * 1e3:>10.3f} {t_fast * 1e3:>10.3f} {t_pure / t_fast:>7.2f}x"


def bench_encode(repeats):
    print(f"{'encode_many (ms/call)':<38} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    domain = PeriodicDomain(1, 2 * np.pi)
    sampler = SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5)
    for d, pts in ((64, 1), (64, 257), (100, 257), (256, 257), (1024, 257), (4096, 64)):
        pm = sample_phase_matrix(d, domain, sampler, seed=1)
        xs = np.random.default_rng(2).uniform(-np.pi, np.pi, size=(pts, 1))
        t_pure = best_time(lambda: _purecore.encode_many(pm.index_matrix, xs, domain.period), repeats)
        t_fast = None
        if _fastcore is not None:
            t_fast = best_time(lambda: _fastcore.encode_many(pm.index_matrix, xs, domain.period), repeats)
        print(fmt_row(f"  d={d}, points={pts}", t_pure, t_fast))


def bench_convolve(repeats):
    print(f"\n{'circular_convolve (ms/call)':<38} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    rng = np.random.default_rng(3)
    for d in (64, 256, 1024, 4096):
        a = rng.normal(size=d)
        a /= np.linalg.norm(a)
        b = rng.normal(size=d)
        b /= np.linalg.norm(b)
        t_pure = best_time(lambda: _purecore.circular_convolve(a, b), repeats)
        t_fast = None
        if _fastcore is not None:
            t_fast = best_time(lambda: _fastcore.circular_convolve(a, b), repeats)
        print(fmt_row(f"  d={d}", t_pure, t_fast))


def bench_profile(repeats):
    # Full Monte-Carlo profile through the public API, switching backends
    # via the selection module.
    from cycssp import _backend, default_grid, empirical_profile, encoder, verification
    from cycssp.verification import ProfileConfig

    print(f"\n{'empirical_profile (ms/run)':<38} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    cfg = ProfileConfig(
        embed_dim=100,
        replicates=50,
        sampler=SamplerSpec(SamplerVariant.UNIFORM_BAND, band=5),
        domain=PeriodicDomain(1, 2 * np.pi),
        grid=default_grid(2 * np.pi),
        master_seed=9,
    )

    times = {}
    for name, mod in (("pure", _purecore), ("compiled", _fastcore)):
        if mod is None:
            times[name] = None
            continue
        encoder._encode_many_raw = mod.encode_many
        try:
            times[name] = best_time(lambda: empirical_profile(cfg), repeats)
        finally:
            encoder._encode_many_raw = _backend.encode_many
    print(fmt_row("  d=100, N=50, grid=257", times["pure"], times["compiled"]))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="best-of-N timing repeats")
    args = parser.parse_args()
    if _fastcore is None:
        print("compiled core not built; timing the pure backend only\n")
    bench_encode(args.repeats)
    bench_convolve(args.repeats)
    bench_profile(args.repeats)


if __name__ == "__main__":
    main()
