"""Command-line entry point: ``zetadim {zeros,dim,plateau,compare,figure}``.

Every file a command writes starts with ``# config.<key>=<value>`` comment
lines holding the effective :class:`RunConfig`, and nothing else that could
vary between runs (no timestamps, no host or backend names). Running the
same command twice therefore produces identical bytes.

Exit codes: 0 success, 1 I/O failure, 2 invalid input or failed
validation, 3 no plateau found.
"""
from __future__ import annotations

import argparse
import io
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .spectra import (EnsembleConfig, circle_dirac, gue_spectrum,
                      poisson_spectrum, read_spectrum, scale_zeros, sphere_dirac,
                      torus_dirac, unfold_zeros_theta, write_spectrum)
from .specdim import (PLATEAU_HEADER, DimensionCurve, LambdaGrid, detect_plateau,
                      dimension_curve, format_plateau, read_curve, write_curve)
from .svg import render_svg
from .zeros import (MissedZeroError, ZeroFileError, ZERO_SEARCH_ORDER, cached_zeros,
                    count_estimate, find_zeros, import_zero_file, reference_zero_sweep,
                    write_zero_file)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_NO_PLATEAU = 3

DEFAULT_CACHE = ".zetadim-cache"
DEFAULT_FIGURE_COUNTS = "1000,2000,5000,10000"
MIN_OVERLAP_EFOLDS = 1.0


class CliError(Exception):
    def __init__(self, message, code=EXIT_INVALID):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    """Everything that determines a command's output."""

    command: str
    cache_dir: str
    seed: int | None = None
    grid: str | None = None
    symmetrize: bool = True
    slope_tol: float | None = None
    min_width: float | None = None
    correction_terms: int | None = None
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)

    def comment_lines(self):
        items = [("version", __version__), ("command", self.command),
                 ("cache_dir", self.cache_dir)]
        for key in ("seed", "grid", "slope_tol", "min_width", "correction_terms"):
            value = getattr(self, key)
            if value is not None:
                items.append((key, value))
        items.append(("symmetrize", str(self.symmetrize).lower()))
        items.extend(sorted(self.inputs.items()))
        items.extend((f"out.{k}", v) for k, v in sorted(self.outputs.items()))
        return [f"config.{k}={_fmt(v)}" for k, v in items]


def _fmt(value):
    if isinstance(value, float):
        return repr(value)
    return str(value)


def resolve_cache_dir(flag):
    """The --cache-dir flag wins over ZETADIM_CACHE, which wins over the default."""
    if flag:
        return flag
    return os.environ.get("ZETADIM_CACHE") or DEFAULT_CACHE


# spectrum mini-language

def _positive_int(text, what):
    try:
        value = int(text)
    except ValueError:
        raise CliError(f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise CliError(f"{what} must be positive, got {value}")
    return value


def _seed(text):
    try:
        value = int(text)
    except ValueError:
        raise CliError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise CliError("seed must be an unsigned 64-bit integer")
    return value


def build_spectrum(text, cache_dir):
    """Turn a spectrum spec into (Spectrum, seed or None).

    Accepted forms: riemann:N, riemann-theta:N, circle:N, torus:d:N,
    sphere:N, gue:N:SEED, poisson:N:SEED, or a path to a spectrum CSV or a
    ``.zeros`` table (scaled like riemann:N).
    """
    parts = text.split(":")
    kind = parts[0]
    shapes = {"riemann": 2, "riemann-theta": 2, "circle": 2, "sphere": 2,
              "torus": 3, "gue": 3, "poisson": 3}
    if kind in shapes and len(parts) == shapes[kind]:
        try:
            if kind in ("riemann", "riemann-theta"):
                n = _positive_int(parts[1], "zero count")
                table = cached_zeros(n, cache_dir)
                spec = scale_zeros(table) if kind == "riemann" else unfold_zeros_theta(table)
                return spec, None
            if kind == "circle":
                return circle_dirac(_positive_int(parts[1], "n_max")), None
            if kind == "sphere":
                return sphere_dirac(_positive_int(parts[1], "n_max")), None
            if kind == "torus":
                d = _positive_int(parts[1], "torus dimension")
                return torus_dirac(d, _positive_int(parts[2], "n_max")), None
            n = _positive_int(parts[1], "ensemble size")
            seed = _seed(parts[2])
            config = EnsembleConfig(n, seed, kind)
            spec = gue_spectrum(config) if kind == "gue" else poisson_spectrum(config)
            return spec, seed
        except (CliError, ValueError, RuntimeError) as exc:
            raise CliError(f"invalid spectrum {text!r}: {exc}") from None
    path = Path(text)
    if path.is_file():
        try:
            if path.suffix == ".zeros":
                return scale_zeros(import_zero_file(path)), None
            return read_spectrum(path), None
        except ValueError as exc:
            raise CliError(f"invalid spectrum file {text!r}: {exc}") from None
    raise CliError(f"invalid spectrum {text!r}: not a known form and not a file")


def _grid(text):
    if text is None:
        return None
    try:
        return LambdaGrid.parse(text)
    except ValueError as exc:
        raise CliError(f"invalid grid {text!r}: {exc}") from None


def _write_text(path, text):
    Path(path).write_text(text, encoding="utf-8")


# zeros

def cmd_zeros(args, cache_dir):
    if args.action == "compute":
        return _zeros_compute(args, cache_dir)
    if args.action == "import":
        return _zeros_import(args, cache_dir)
    return _zeros_check(args, cache_dir)


def _zeros_compute(args, cache_dir):
    if args.count is not None:
        limit = {"count": _positive_int(str(args.count), "count")}
        name = f"{args.count}.zeros"
    else:
        limit = {"t_max": float(args.tmax)}
        name = f"{args.tmax}.zeros"
    out = Path(args.out) if args.out else Path(cache_dir) / name
    config = RunConfig("zeros compute", cache_dir, correction_terms=args.correction_terms,
                       inputs=dict(limit), outputs={"zeros": str(out)})
    try:
        table = find_zeros(**limit, correction_terms=args.correction_terms)
    except (ValueError, MissedZeroError) as exc:
        raise CliError(str(exc)) from None
    out.parent.mkdir(parents=True, exist_ok=True)
    write_zero_file(table, out, comments=config.comment_lines())
    print(f"{len(table)} zeros, first={float(table.heights[0])!r} last={float(table.heights[-1])!r} "
          f"abs_error_bound={table.abs_error_bound!r} -> {out}")
    return EXIT_OK


def _zeros_import(args, cache_dir):
    try:
        table = import_zero_file(args.file)
    except ZeroFileError as exc:
        raise CliError(f"{args.file}: {exc}") from None
    out = Path(cache_dir) / f"imported-{len(table)}.zeros"
    config = RunConfig("zeros import", cache_dir, inputs={"file": args.file},
                       outputs={"zeros": str(out)})
    out.parent.mkdir(parents=True, exist_ok=True)
    write_zero_file(table, out, comments=config.comment_lines())
    print(f"{len(table)} zeros validated, abs_error_bound={table.abs_error_bound!r} -> {out}")
    return EXIT_OK


def _zeros_check(args, cache_dir):
    count = _positive_int(str(args.count), "count")
    try:
        table = find_zeros(count=count, correction_terms=args.correction_terms)
    except (ValueError, MissedZeroError) as exc:
        raise CliError(str(exc)) from None
    t_hi = float(table.heights[-1]) + 0.5 / count_estimate(table.heights[-1]).density_at_T
    oracle = reference_zero_sweep(10.0, t_hi, step=args.step)
    oracle = oracle[:count]
    if oracle.size != count:
        raise CliError(f"oracle sweep found {oracle.size} zeros, zero search found {count}")
    dev = np.abs(table.heights - oracle)
    worst = int(np.argmax(dev))
    max_dev = float(dev[worst])
    print(f"zeros={count} max_abs_deviation={max_dev!r} at_index={worst + 1} "
          f"tolerance={args.tolerance!r}")
    return EXIT_OK if max_dev < args.tolerance else EXIT_INVALID


# curves

def cmd_dim(args, cache_dir):
    grid = _grid(args.grid)
    spec, seed = build_spectrum(args.spectrum, cache_dir)
    curve = dimension_curve(spec, grid, symmetrize=not args.no_symmetrize)
    outputs = {"curve": args.out}
    if args.svg:
        outputs["svg"] = args.svg
    if args.spectrum_out:
        outputs["spectrum"] = args.spectrum_out
    config = RunConfig("dim", cache_dir, seed=seed, grid=curve.metadata["grid"],
                       symmetrize=not args.no_symmetrize,
                       inputs={"spectrum": args.spectrum}, outputs=outputs)
    comments = config.comment_lines()
    write_curve(curve, args.out, comments=comments)
    if args.spectrum_out:
        write_spectrum(spec, args.spectrum_out, comments=comments)
    if args.svg:
        report = detect_plateau(curve)
        _write_text(args.svg, render_svg([curve], plateaus=[report], comments=comments))
    print(f"{curve.spectrum_label}: {len(curve)} points -> {args.out}")
    return EXIT_OK


def _load_curve(path):
    try:
        return read_curve(path)
    except OSError:
        raise
    except (ValueError, IndexError) as exc:
        raise CliError(f"invalid curve file {path}: {exc}") from None


def cmd_plateau(args, cache_dir):
    curve = _load_curve(args.curve)
    report = detect_plateau(curve, args.slope_tol, args.min_width,
                            exclude_saturation=not args.include_saturation)
    if args.header:
        print(PLATEAU_HEADER)
    print(format_plateau(report))
    return EXIT_OK if report.found else EXIT_NO_PLATEAU


def compare_curves(a: DimensionCurve, b: DimensionCurve):
    """Dimension difference a - b on a's grid points inside the common range.

    b is interpolated linearly in ln(lambda). Raises CliError when the
    ranges share less than one e-fold.
    """
    lo = max(a.lambdas[0], b.lambdas[0])
    hi = min(a.lambdas[-1], b.lambdas[-1])
    if not hi > lo or math.log(hi / lo) < MIN_OVERLAP_EFOLDS:
        raise CliError("curves overlap by less than one e-fold in lambda")
    keep = (a.lambdas >= lo) & (a.lambdas <= hi)
    lams = a.lambdas[keep]
    dim_a = a.dims[keep]
    dim_b = np.interp(np.log(lams), np.log(b.lambdas), b.dims)
    return lams, dim_a, dim_b, dim_a - dim_b


def _mean_or_none(report):
    return repr(report.mean_dim) if report.found else "none"


def cmd_compare(args, cache_dir):
    a = _load_curve(args.a)
    b = _load_curve(args.b)
    lams, dim_a, dim_b, diff = compare_curves(a, b)
    pa = detect_plateau(a, args.slope_tol, args.min_width)
    pb = detect_plateau(b, args.slope_tol, args.min_width)
    max_abs = float(np.max(np.abs(diff)))
    plateau_diff = repr(pa.mean_dim - pb.mean_dim) if pa.found and pb.found else "none"
    summary = (f"max_abs_diff={max_abs!r} points={lams.size} plateau_a={_mean_or_none(pa)} "
               f"plateau_b={_mean_or_none(pb)} plateau_diff={plateau_diff}")

    outputs = {"comparison": args.out} if args.out else {}
    config = RunConfig("compare", cache_dir, slope_tol=args.slope_tol, min_width=args.min_width,
                       inputs={"a": args.a, "b": args.b}, outputs=outputs)
    buf = io.StringIO()
    for line in config.comment_lines():
        buf.write(f"# {line}\n")
    buf.write(f"# a={a.spectrum_label} b={b.spectrum_label}\n")
    buf.write(f"# {summary}\n")
    buf.write("lambda,dim_a,dim_b,diff\n")
    for row in zip(lams, dim_a, dim_b, diff):
        buf.write(",".join(repr(float(x)) for x in row) + "\n")
    if args.out:
        _write_text(args.out, buf.getvalue())
        print(summary)
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def _counts(text):
    try:
        counts = [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise CliError(f"--counts must be comma-separated integers, got {text!r}") from None
    if not counts or any(c < 1 for c in counts) or counts != sorted(set(counts)):
        raise CliError("--counts must be strictly ascending positive integers")
    return counts


def cmd_figure(args, cache_dir):
    """Curves for several prefix sizes of one zero table, overlaid in one SVG."""
    counts = _counts(args.counts)
    grid = _grid(args.grid)
    try:
        table = cached_zeros(counts[-1], cache_dir)
    except (ValueError, MissedZeroError) as exc:
        raise CliError(str(exc)) from None
    if grid is None:
        grid = LambdaGrid.default_for(scale_zeros(table))
    curves, reports = [], []
    for n in counts:
        curve = dimension_curve(scale_zeros(table.head(n)), grid)
        curves.append(curve)
        reports.append(detect_plateau(curve, args.slope_tol, args.min_width))

    outputs = {"svg": args.svg}
    if args.csv:
        outputs["plateaus"] = args.csv
    config = RunConfig("figure", cache_dir, grid=str(grid), slope_tol=args.slope_tol,
                       min_width=args.min_width, inputs={"counts": ",".join(map(str, counts))},
                       outputs=outputs)
    comments = config.comment_lines()
    labels = [f"N = {n}" for n in counts]
    svg = render_svg(curves, labels, reports, comments=comments,
                     title="Spectral dimension of scaled zeta zeros")
    _write_text(args.svg, svg)

    lines = [f"n,{PLATEAU_HEADER}"] + [f"{n},{format_plateau(r)}" for n, r in zip(counts, reports)]
    if args.csv:
        _write_text(args.csv, "".join(f"# {c}\n" for c in comments) + "\n".join(lines) + "\n")
    print("\n".join(lines))
    return EXIT_OK


# argument parsing

def build_parser():
    parser = argparse.ArgumentParser(
        prog="zetadim",
        description="Zeta zeros, heat-kernel spectral dimension and plateau reports.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--cache-dir", default=None,
                        help="zero-table cache (default: $ZETADIM_CACHE or ./.zetadim-cache)")
    sub = parser.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeros", help="compute, import or check zero tables")
    zsub = z.add_subparsers(dest="action", required=True)
    zc = zsub.add_parser("compute", help="locate zeros with the Riemann-Siegel formula")
    lim = zc.add_mutually_exclusive_group(required=True)
    lim.add_argument("--count", type=int, help="first N zeros")
    lim.add_argument("--tmax", type=float, help="all zeros up to this height")
    zc.add_argument("--out", help="zero file (default: <cache>/<N or T>.zeros)")
    zc.add_argument("--correction-terms", type=int, default=ZERO_SEARCH_ORDER)
    zi = zsub.add_parser("import", help="validate a tabulated zero file and cache it")
    zi.add_argument("--file", required=True)
    zk = zsub.add_parser("check", help="compare computed zeros with the Euler-Maclaurin oracle")
    zk.add_argument("--count", type=int, required=True)
    zk.add_argument("--step", type=float, default=0.05, help="oracle scan step")
    zk.add_argument("--tolerance", type=float, default=1e-6)
    zk.add_argument("--correction-terms", type=int, default=ZERO_SEARCH_ORDER)

    d = sub.add_parser("dim", help="heat trace and spectral dimension curve")
    d.add_argument("--spectrum", required=True,
                   help="riemann:N | riemann-theta:N | circle:N | torus:d:N | sphere:N | "
                        "gue:N:SEED | poisson:N:SEED | PATH")
    d.add_argument("--grid", help="lo:hi:pts (default: u_min/10 : 10 u_max : 200)")
    d.add_argument("--no-symmetrize", action="store_true")
    d.add_argument("--out", required=True, help="curve CSV")
    d.add_argument("--svg", help="also render the curve")
    d.add_argument("--spectrum-out", help="also write the spectrum CSV")

    def detector(p):
        p.add_argument("--slope-tol", type=float, default=0.05, help="per e-fold")
        p.add_argument("--min-width", type=float, default=1.0, help="in e-folds")

    p = sub.add_parser("plateau", help="detect the flat window of a curve")
    p.add_argument("--curve", required=True)
    detector(p)
    p.add_argument("--include-saturation", action="store_true",
                   help="also search above u_max/3")
    p.add_argument("--header", action="store_true", help="print the CSV header first")

    c = sub.add_parser("compare", help="difference of two curves on their common range")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--out")
    detector(c)

    f = sub.add_parser("figure", help="overlay curves for several zero counts as SVG")
    f.add_argument("--counts", default=DEFAULT_FIGURE_COUNTS)
    f.add_argument("--svg", required=True)
    f.add_argument("--grid")
    f.add_argument("--csv", help="also write the per-N plateau table")
    detector(f)
    return parser


COMMANDS = {"zeros": cmd_zeros, "dim": cmd_dim, "plateau": cmd_plateau,
            "compare": cmd_compare, "figure": cmd_figure}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = resolve_cache_dir(args.cache_dir)
    try:
        return COMMANDS[args.command](args, cache_dir)
    except CliError as exc:
        print(f"zetadim: error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"zetadim: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
