"""Heat-kernel spectral dimension of a point spectrum.

For a spectrum {u_k} of |D| with multiplicities m_k the heat trace is

    Z(L) = s * sum_k m_k exp(-u_k^2 / L^2)      (s = 2 counts both signs +/-u_k)

and the spectral dimension is its logarithmic growth rate

    D_s(L) = d ln Z / d ln L = (2 / Z) * sum_k m_k (u_k/L)^2 exp(-u_k^2 / L^2).

Z grows like L^d for a d-dimensional manifold, so D_s is taken with a plus
sign; the formula is sometimes quoted with a minus, which would make every
plateau negative.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._backend import BACKEND, kernels
from .spectra import Spectrum, scale_zeros
from .zeros import ZeroTable

__all__ = [
    "SATURATION_FRACTION",
    "LambdaGrid",
    "DimensionCurve",
    "PlateauReport",
    "heat_trace",
    "log_heat_trace",
    "spectral_dimension",
    "dimension_curve",
    "detect_plateau",
    "plateau_growth",
    "write_curve",
    "read_curve",
    "format_plateau",
    "PLATEAU_HEADER",
]

DEFAULT_POINTS = 200
DEFAULT_SLOPE_TOL = 0.05
DEFAULT_MIN_WIDTH = 1.0
# above u_max/3 the truncated spectrum no longer follows its Weyl growth
SATURATION_FRACTION = 1.0 / 3.0
PLATEAU_HEADER = "lambda_lo,lambda_hi,mean_dim,std_dim,width_efolds,found"


def _kernel_args(spec):
    if BACKEND == "python":
        return spec.values.tolist(), spec.multiplicities.astype(np.float64).tolist()
    return spec.values, spec.multiplicities.astype(np.float64)


def _sums(spec, lam):
    lam = float(lam)
    if not lam > 0.0:
        raise ValueError("lambda must be positive")
    values, mults = _kernel_args(spec)
    return kernels.gauss_sums(values, mults, lam)


def heat_trace(spec: Spectrum, lam: float, symmetrize: bool = True) -> float:
    """Z(L) = s * sum m_k exp(-u_k^2/L^2), summed with Neumaier compensation.

    Terms far in the tail underflow to 0; at very small L the whole trace
    can underflow, use :func:`log_heat_trace` there.
    """
    s, _, q0 = _sums(spec, lam)
    return (2.0 if symmetrize else 1.0) * math.exp(-q0) * s


def log_heat_trace(spec: Spectrum, lam: float, symmetrize: bool = True) -> float:
    s, _, q0 = _sums(spec, lam)
    return math.log(2.0 if symmetrize else 1.0) - q0 + math.log(s)


def spectral_dimension(spec: Spectrum, lam: float) -> float:
    """Closed-form d ln Z / d ln L; independent of the +/- symmetrization."""
    s, m, _ = _sums(spec, lam)
    return 2.0 * m / s


@dataclass(frozen=True)
class LambdaGrid:
    lambda_min: float
    lambda_max: float
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if not 0.0 < self.lambda_min < self.lambda_max or not math.isfinite(self.lambda_max):
            raise ValueError("grid needs 0 < lambda_min < lambda_max")
        if int(self.points) < 16:
            raise ValueError("grid needs at least 16 points")

    @classmethod
    def default_for(cls, spec: Spectrum, points=DEFAULT_POINTS):
        return cls(spec.u_min / 10.0, 10.0 * spec.u_max, points)

    @classmethod
    def parse(cls, text):
        """'lo:hi:pts' as used on the command line."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid {text!r} is not lo:hi:pts")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))

    def lambdas(self):
        return np.geomspace(self.lambda_min, self.lambda_max, int(self.points))

    def __str__(self):
        return f"{self.lambda_min!r}:{self.lambda_max!r}:{self.points}"


@dataclass(frozen=True, eq=False)
class DimensionCurve:
    lambdas: np.ndarray
    traces: np.ndarray
    dims: np.ndarray
    symmetrized: bool
    spectrum_label: str
    n: int
    u_min: float
    u_max: float
    metadata: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, DimensionCurve):
            return NotImplemented
        return (self.symmetrized == other.symmetrized
                and self.spectrum_label == other.spectrum_label
                and self.n == other.n
                and self.u_min == other.u_min and self.u_max == other.u_max
                and np.array_equal(self.lambdas, other.lambdas)
                and np.array_equal(self.traces, other.traces)
                and np.array_equal(self.dims, other.dims))

    def __len__(self):
        return self.lambdas.size

    @property
    def saturation_lambda(self):
        return self.u_max * SATURATION_FRACTION


def dimension_curve(spec: Spectrum, grid: LambdaGrid | None = None,
                    symmetrize: bool = True) -> DimensionCurve:
    """Heat trace and spectral dimension on a log-spaced grid of cutoffs.

    The default grid spans [u_min/10, 10 u_max] with 200 points.
    """
    if grid is None:
        grid = LambdaGrid.default_for(spec)
    lams = grid.lambdas()
    values, mults = _kernel_args(spec)
    lam_arg = lams.tolist() if BACKEND == "python" else lams
    s, m, q0 = kernels.gauss_sums_grid(values, mults, lam_arg)
    s = np.array(s)
    m = np.array(m)
    q0 = np.array(q0)
    scale = 2.0 if symmetrize else 1.0
    traces = scale * np.exp(-q0) * s
    dims = 2.0 * m / s
    return DimensionCurve(lams, traces, dims, bool(symmetrize), spec.label,
                          spec.total_multiplicity, spec.u_min, spec.u_max,
                          {"grid": str(grid)})


@dataclass(frozen=True)
class PlateauReport:
    lambda_lo: float
    lambda_hi: float
    mean_dim: float
    std_dim: float
    width_efolds: float
    found: bool

    @classmethod
    def not_found(cls):
        return cls(0.0, 0.0, 0.0, 0.0, 0.0, False)


def detect_plateau(curve: DimensionCurve, slope_tol: float = DEFAULT_SLOPE_TOL,
                   min_width_efolds: float = DEFAULT_MIN_WIDTH,
                   exclude_saturation: bool = True) -> PlateauReport:
    """Widest run of grid segments with |dD_s/d ln L| <= slope_tol.

    Runs narrower than ``min_width_efolds`` are ignored; ties go to the
    smaller std, then the smaller lambda_lo. Grid points above u_max/3 are
    left out unless ``exclude_saturation`` is false.
    """
    lams = curve.lambdas
    dims = curve.dims
    usable = np.isfinite(dims)
    if exclude_saturation:
        usable &= lams <= curve.saturation_lambda
    log_l = np.log(lams)
    slopes = np.diff(dims) / np.diff(log_l)
    flat = (np.abs(slopes) <= slope_tol) & usable[:-1] & usable[1:]

    best = None
    i = 0
    nseg = flat.size
    while i < nseg:
        if not flat[i]:
            i += 1
            continue
        j = i
        while j < nseg and flat[j]:
            j += 1
        # segments i..j-1 -> points i..j
        width = float(log_l[j] - log_l[i])
        if width >= min_width_efolds:
            window = dims[i:j + 1]
            cand = (width, -float(np.std(window)), -float(lams[i]), i, j)
            if best is None or cand[:3] > best[:3]:
                best = cand
        i = j
    if best is None:
        return PlateauReport.not_found()
    width, _, _, i, j = best
    window = dims[i:j + 1]
    return PlateauReport(float(lams[i]), float(lams[j]), float(np.mean(window)),
                         float(np.std(window)), width, True)


def plateau_growth(zeros: ZeroTable, prefix_sizes, grid: LambdaGrid | None = None,
                   slope_tol: float = DEFAULT_SLOPE_TOL,
                   min_width_efolds: float = DEFAULT_MIN_WIDTH,
                   symmetrize: bool = True):
    """Plateau reports for the scaled-zero spectrum of each table prefix.

    All prefixes share one grid; by default the one suited to the largest
    prefix.
    """
    sizes = [int(n) for n in prefix_sizes]
    if sizes != sorted(sizes) or not sizes:
        raise ValueError("prefix sizes must be ascending")
    if sizes[0] < 1 or sizes[-1] > len(zeros):
        raise ValueError(f"prefix sizes must lie in 1..{len(zeros)}")
    if grid is None:
        grid = LambdaGrid.default_for(scale_zeros(zeros.head(sizes[-1])))
    out = []
    for n in sizes:
        curve = dimension_curve(scale_zeros(zeros.head(n)), grid, symmetrize)
        out.append((n, detect_plateau(curve, slope_tol, min_width_efolds)))
    return out


def format_plateau(report: PlateauReport) -> str:
    return (f"{report.lambda_lo!r},{report.lambda_hi!r},{report.mean_dim!r},"
            f"{report.std_dim!r},{report.width_efolds!r},{str(report.found).lower()}")


def write_curve(curve: DimensionCurve, path, comments=()):
    """CSV "lambda,heat_trace,spectral_dimension" led by '# key=value' comments."""
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    buf.write(f"# spectrum={curve.spectrum_label} symmetrize={str(curve.symmetrized).lower()} "
              f"n={curve.n}\n")
    buf.write(f"# u_min={curve.u_min!r} u_max={curve.u_max!r}\n")
    buf.write("lambda,heat_trace,spectral_dimension\n")
    for lam, tr, d in zip(curve.lambdas, curve.traces, curve.dims):
        buf.write(f"{float(lam)!r},{float(tr)!r},{float(d)!r}\n")
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def _parse_pairs(body):
    out = {}
    for word in body.split():
        if "=" in word:
            k, v = word.split("=", 1)
            out[k] = v
    return out


def read_curve(path) -> DimensionCurve:
    path = Path(path)
    meta = {}
    rows = []
    with path.open(encoding="utf-8") as fh:
        data_lines = []
        for line in fh:
            if line.startswith("#"):
                meta.update(_parse_pairs(line[1:]))
            elif line.strip():
                data_lines.append(line)
    reader = csv.reader(data_lines)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["lambda", "heat_trace", "spectral_dimension"]:
        raise ValueError(f"{path}: expected header 'lambda,heat_trace,spectral_dimension'")
    for row in reader:
        rows.append([float(x) for x in row])
    if len(rows) < 2:
        raise ValueError(f"{path}: a curve needs at least two rows")
    arr = np.array(rows)
    lams = arr[:, 0]
    if np.any(np.diff(lams) <= 0):
        raise ValueError(f"{path}: lambda column must be strictly increasing")
    u_max = float(meta.get("u_max", "inf"))
    u_min = float(meta.get("u_min", "nan"))
    return DimensionCurve(lams, arr[:, 1], arr[:, 2],
                          meta.get("symmetrize", "true") == "true",
                          meta.get("spectrum", path.stem), int(meta.get("n", "0")),
                          u_min, u_max, {k: v for k, v in meta.items()
                                         if k not in ("spectrum", "symmetrize", "n", "u_min", "u_max")})
