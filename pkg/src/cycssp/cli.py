"""Command-line interface: matrix generation, encoding, kernel curves,
the Monte-Carlo figure reproduction, and the invariant verifier.

Exit codes: 0 success, 1 runtime/I-O failure or failed verification,
2 invalid flags.  All commands are deterministic given their flags; CSV
output uses '.' decimals, '\\n' newlines and 17 significant digits so
64-bit floats round-trip.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .domain import PeriodicDomain, PhaseMatrix, SamplerSpec, SamplerVariant
from .encoder import encode_many
from .kernels import KernelSpec, KernelVariant
from .sampling import derive_seed, sample_phase_matrix
from .verification import ProfileConfig, default_grid, empirical_profile, profile_report, run_checks

_SAMPLER_FLAGS = {"uniform": SamplerVariant.UNIFORM_BAND, "normal": SamplerVariant.DISCRETE_NORMAL}
_KERNEL_FLAGS = {"dirichlet": KernelVariant.DIRICHLET, "gaussian": KernelVariant.PERIODIC_GAUSSIAN}

FIGURE1_DEFAULTS = {"replicates": 500, "dim": 100, "band": 5, "sigma": 1.0, "period": math.tau, "seed": 2024}


def _period(text: str) -> float:
    """Period flag value: a literal real, or 'two-pi' for the float nearest 2*pi."""
    if text.strip().lower() in ("two-pi", "twopi", "2pi"):
        return math.tau
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid period {text!r} (a real number or 'two-pi')")


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycssp",
        description="Cyclic spatial semantic pointer embeddings and their similarity kernels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw a phase matrix and write it as JSON")
    p.add_argument("--dim", type=int, required=True, help="embedding dimensionality d (>= 3)")
    p.add_argument("--n", type=int, required=True, help="feature-space dimensionality")
    p.add_argument("--period", type=_period, required=True, help="feature-space period (or 'two-pi')")
    p.add_argument("--sampler", choices=sorted(_SAMPLER_FLAGS), required=True)
    p.add_argument("--band", type=int, required=True, help="inclusive frequency-index bound B")
    p.add_argument("--sigma", type=float, default=None, help="shape parameter (normal sampler only)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output JSON path")

    p = sub.add_parser("encode", help="encode points with a stored phase matrix")
    p.add_argument("--matrix", required=True, help="phase matrix JSON path")
    p.add_argument(
        "--x",
        action="append",
        required=True,
        metavar="V1[,V2,...]",
        help="point to encode (comma-separated coordinates); repeat for multiple rows",
    )
    p.add_argument("--out", required=True, help="output CSV path (one embedding per row)")

    p = sub.add_parser("kernel", help="tabulate an analytic kernel over a displacement grid")
    p.add_argument("--kernel", choices=sorted(_KERNEL_FLAGS), required=True)
    p.add_argument("--band", type=int, required=True)
    p.add_argument("--sigma", type=float, default=None, help="shape parameter (gaussian kernel only)")
    p.add_argument("--period", type=_period, required=True)
    p.add_argument("--grid-min", type=float, default=None, help="grid start (default -period/2)")
    p.add_argument("--grid-max", type=float, default=None, help="grid end (default period/2)")
    p.add_argument("--grid-points", type=int, default=257)
    p.add_argument("--out", required=True, help="output CSV path")

    p = sub.add_parser("figure1", help="reproduce the Monte-Carlo kernel comparison")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--replicates", type=int, default=FIGURE1_DEFAULTS["replicates"])
    p.add_argument("--dim", type=int, default=FIGURE1_DEFAULTS["dim"])
    p.add_argument("--band", type=int, default=FIGURE1_DEFAULTS["band"])
    p.add_argument("--sigma", type=float, default=FIGURE1_DEFAULTS["sigma"])
    p.add_argument("--period", type=_period, default=FIGURE1_DEFAULTS["period"])
    p.add_argument("--seed", type=int, default=FIGURE1_DEFAULTS["seed"])

    p = sub.add_parser("verify", help="run the cross-module invariant checks")
    p.add_argument("--seed", type=int, default=2024)

    return parser


def _parse_point(parser, text: str, n: int) -> list[float]:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        parser.error(f"--x value {text!r} is not a comma-separated list of reals")
    if len(values) != n:
        parser.error(f"--x value {text!r} has {len(values)} coordinates, matrix encodes n={n}")
    return values


def _cmd_sample(parser, args) -> int:
    if args.dim < 3:
        parser.error("--dim must be at least 3: one zero-frequency slot plus one conjugate pair")
    if args.n < 1:
        parser.error("--n must be at least 1")
    if not args.period > 0:
        parser.error("--period must be positive")
    if args.band < 1:
        parser.error("--band must be at least 1")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in 64 unsigned bits")
    variant = _SAMPLER_FLAGS[args.sampler]
    if variant is SamplerVariant.DISCRETE_NORMAL:
        if args.sigma is None or not args.sigma > 0:
            parser.error("--sigma must be positive for the normal sampler")
    elif args.sigma is not None:
        parser.error("--sigma only applies to the normal sampler")
    pm = sample_phase_matrix(
        args.dim,
        PeriodicDomain(args.n, args.period),
        SamplerSpec(variant, band=args.band, sigma=args.sigma),
        args.seed,
    )
    _write_text(args.out, pm.to_json() + "\n")
    return 0


def _cmd_encode(parser, args) -> int:
    with open(args.matrix, encoding="ascii") as fh:
        pm = PhaseMatrix.from_json(fh.read())
    points = np.array([_parse_point(parser, text, pm.domain.n) for text in args.x])
    emb = encode_many(pm, points)
    rows = [",".join(_fmt(v) for v in row) for row in emb]
    _write_text(args.out, "\n".join(rows) + "\n")
    return 0


def _cmd_kernel(parser, args) -> int:
    if args.band < 1:
        parser.error("--band must be at least 1")
    if not args.period > 0:
        parser.error("--period must be positive")
    if args.grid_points < 1:
        parser.error("--grid-points must be at least 1")
    variant = _KERNEL_FLAGS[args.kernel]
    if variant is KernelVariant.PERIODIC_GAUSSIAN:
        if args.sigma is None or not args.sigma > 0:
            parser.error("--sigma must be positive for the gaussian kernel")
    elif args.sigma is not None:
        parser.error("--sigma only applies to the gaussian kernel")
    lo = -args.period / 2.0 if args.grid_min is None else args.grid_min
    hi = args.period / 2.0 if args.grid_max is None else args.grid_max
    if not lo <= hi:
        parser.error("--grid-min must not exceed --grid-max")
    spec = KernelSpec(variant, band=args.band, period=args.period, sigma=args.sigma)
    grid = np.linspace(lo, hi, args.grid_points)
    values = spec.evaluate(grid)
    lines = ["displacement,analytic"]
    lines += [f"{_fmt(x)},{_fmt(v)}" for x, v in zip(grid, values)]
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_figure1(parser, args) -> int:
    if args.replicates < 1:
        parser.error("--replicates must be at least 1")
    if args.dim < 3:
        parser.error("--dim must be at least 3: one zero-frequency slot plus one conjugate pair")
    if args.band < 1:
        parser.error("--band must be at least 1")
    if not args.sigma > 0:
        parser.error("--sigma must be positive")
    if not args.period > 0:
        parser.error("--period must be positive")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in 64 unsigned bits")
    domain = PeriodicDomain(1, args.period)
    grid = default_grid(args.period)
    profiles = {}
    for stream, (label, sampler) in enumerate(
        (
            ("dirichlet", SamplerSpec(SamplerVariant.UNIFORM_BAND, band=args.band)),
            ("gaussian", SamplerSpec(SamplerVariant.DISCRETE_NORMAL, band=args.band, sigma=args.sigma)),
        )
    ):
        cfg = ProfileConfig(
            embed_dim=args.dim,
            replicates=args.replicates,
            sampler=sampler,
            domain=domain,
            grid=grid,
            master_seed=derive_seed(args.seed, stream),
        )
        profiles[label] = empirical_profile(cfg)

    lines = [
        "displacement,dirichlet_analytic,dirichlet_empirical_mean,dirichlet_empirical_std,"
        "gaussian_analytic,gaussian_empirical_mean,gaussian_empirical_std"
    ]
    d, g = profiles["dirichlet"], profiles["gaussian"]
    for i, x in enumerate(grid):
        cells = (x, d.analytic[i], d.empirical_mean[i], d.empirical_std[i],
                 g.analytic[i], g.empirical_mean[i], g.empirical_std[i])
        lines.append(",".join(_fmt(c) for c in cells))
    _write_text(args.out, "\n".join(lines) + "\n")

    for label in ("dirichlet", "gaussian"):
        print(f"{label} max deviation: {profile_report(profiles[label]).max_abs_deviation:.6f}")
    return 0


def _cmd_verify(parser, args) -> int:
    results = run_checks(seed=args.seed)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {
    "sample": _cmd_sample,
    "encode": _cmd_encode,
    "kernel": _cmd_kernel,
    "figure1": _cmd_figure1,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](parser, args)
    except OSError as exc:
        print(f"cycssp {args.command}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"cycssp {args.command}: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
