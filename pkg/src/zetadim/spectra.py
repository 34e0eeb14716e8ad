"""Point spectra of |D|: scaled zeta zeros and exactly known baselines.

Every generator returns a :class:`Spectrum` (ascending positive values with
integer multiplicities). The +/- symmetry of a Dirac spectrum is applied
later, in :mod:`zetadim.specdim`.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._backend import kernels
from .zeros import ZeroTable

__all__ = [
    "RNG_NAME",
    "Spectrum",
    "EnsembleConfig",
    "scale_zeros",
    "unfold_zeros_theta",
    "circle_dirac",
    "torus_dirac",
    "sphere_dirac",
    "poisson_spectrum",
    "tridiagonal_eigenvalues",
    "semicircle_cdf",
    "gue_tridiagonal",
    "gue_spectrum",
    "nearest_neighbor_gaps",
    "wigner_surmise_cdf",
    "read_spectrum",
    "write_spectrum",
]

RNG_NAME = "numpy-PCG64"
QL_MAX_SWEEPS = 50
COLLISION_STEP = 1e-12


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray
    multiplicities: np.ndarray
    label: str = ""

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.float64)
        m = np.ascontiguousarray(self.multiplicities, dtype=np.int64)
        v.setflags(write=False)
        m.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "multiplicities", m)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("a spectrum needs at least one value")
        if m.shape != v.shape:
            raise ValueError("values and multiplicities differ in length")
        if not np.all(np.isfinite(v)) or v[0] <= 0.0:
            raise ValueError("spectrum values must be finite and positive")
        if np.any(np.diff(v) <= 0.0):
            raise ValueError("spectrum values must be strictly increasing")
        if np.any(m < 1):
            raise ValueError("multiplicities must be >= 1")

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return (self.label == other.label
                and np.array_equal(self.values, other.values)
                and np.array_equal(self.multiplicities, other.multiplicities))

    @property
    def total_multiplicity(self):
        return int(self.multiplicities.sum())

    @property
    def u_min(self):
        return float(self.values[0])

    @property
    def u_max(self):
        return float(self.values[-1])

    def scaled(self, c):
        return Spectrum(self.values * c, self.multiplicities, f"{self.label}*{c!r}")


@dataclass(frozen=True)
class EnsembleConfig:
    size: int
    seed: int
    ensemble: str = "gue"

    def __post_init__(self):
        if self.ensemble not in ("gue", "poisson"):
            raise ValueError(f"unknown ensemble {self.ensemble!r}")
        if int(self.size) < 2:
            raise ValueError("ensemble size must be >= 2")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def rng(self):
        return np.random.Generator(np.random.PCG64(int(self.seed)))


def _ones(n):
    return np.ones(n, dtype=np.int64)


def scale_zeros(zeros: ZeroTable) -> Spectrum:
    """u_j = (t_j / 2pi) ln(t_j / 2pi), which has unit mean spacing asymptotically.

    At finite height the local spacing is about 1 + 1/ln(t/2pi).
    """
    t = zeros.heights
    if t[0] <= 2.0 * math.pi / math.e:
        raise ValueError("heights must exceed 2pi/e for the map to be increasing")
    x = t / (2.0 * math.pi)
    return Spectrum(x * np.log(x), _ones(t.size), f"riemann:{t.size}")


def unfold_zeros_theta(zeros: ZeroTable) -> Spectrum:
    """Alternative unfolding u_j = theta(t_j)/pi, exact unit mean spacing.

    Differs from :func:`scale_zeros`; meant as a sensitivity check on the plateau level.
    """
    u = np.array([kernels.theta(float(t)) for t in zeros.heights]) / math.pi
    if u[0] <= 0.0:
        # theta(t) < 0 below the first Gram point; shift keeps order and spacing
        u = u - u[0] + 0.5
    return Spectrum(u, _ones(u.size), f"riemann-theta:{u.size}")


def circle_dirac(n_max: int) -> Spectrum:
    """|eigenvalues| k + 1/2 of the Dirac operator on a circle, two modes each."""
    if n_max < 10:
        raise ValueError("n_max < 10 is too short for any plateau")
    return Spectrum(np.arange(n_max) + 0.5, np.full(n_max, 2, dtype=np.int64),
                    f"circle:{n_max}")


def _square_norm_counts(d, n_max):
    """counts[s] = #{k in Z^d : |k|_inf <= n_max, |k|^2 = s}."""
    ks = np.arange(-n_max, n_max + 1)
    counts = np.zeros(1, dtype=np.int64)
    counts[0] = 1
    for _ in range(d):
        new = np.zeros(counts.size + n_max * n_max, dtype=np.int64)
        for k in ks:
            shift = int(k * k)
            new[shift:shift + counts.size] += counts
        counts = new
    return counts


def torus_dirac(d: int, n_max: int) -> Spectrum:
    """|k| over lattice vectors 0 < |k|_inf <= n_max in Z^d, grouped by value."""
    if d not in (1, 2, 3):
        raise ValueError("torus dimension must be 1, 2 or 3")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    counts = _square_norm_counts(d, n_max)
    counts[0] = 0  # zero mode
    sq = np.nonzero(counts)[0]
    return Spectrum(np.sqrt(sq.astype(np.float64)), counts[sq], f"torus:{d}:{n_max}")


def sphere_dirac(n_max: int) -> Spectrum:
    """Round 2-sphere: |eigenvalue| n with multiplicity 2n."""
    if n_max < 10:
        raise ValueError("n_max < 10 is too short for any plateau")
    n = np.arange(1, n_max + 1)
    return Spectrum(n.astype(np.float64), 2 * n, f"sphere:{n_max}")


def poisson_spectrum(config: EnsembleConfig) -> Spectrum:
    """Cumulative sums of i.i.d. unit-mean exponential gaps."""
    if config.ensemble != "poisson":
        raise ValueError("config.ensemble must be 'poisson'")
    gaps = config.rng().standard_exponential(int(config.size))
    return Spectrum(np.cumsum(gaps), _ones(int(config.size)),
                    f"poisson:{config.size}:{config.seed}")


def tridiagonal_eigenvalues(diag, offdiag):
    """All eigenvalues of a symmetric tridiagonal matrix, ascending.

    Implicit-shift QL; raises RuntimeError when an eigenvalue needs more
    than 50 sweeps.
    """
    diag = [float(x) for x in diag]
    offdiag = [float(x) for x in offdiag]
    if not diag:
        raise ValueError("empty matrix")
    if len(offdiag) != len(diag) - 1:
        raise ValueError("offdiag must be one shorter than diag")
    eig = kernels.tql_eigenvalues(diag, offdiag, QL_MAX_SWEEPS)
    if eig is None:
        raise RuntimeError(f"QL iteration exceeded {QL_MAX_SWEEPS} sweeps")
    return np.sort(np.array(eig))


def semicircle_cdf(x, n):
    """n times the integrated semicircle law on [-2, 2]; clamps outside."""
    x = np.clip(np.asarray(x, dtype=np.float64), -2.0, 2.0)
    return n * (0.5 + x * np.sqrt(4.0 - x * x) / (4.0 * math.pi)
                + np.arcsin(x / 2.0) / math.pi)


def gue_tridiagonal(config: EnsembleConfig):
    """Diagonal and off-diagonal of the beta = 2 Hermite tridiagonal model.

    H = (1/sqrt 2) tridiag(N(0, 2), chi_{2(N-k)}); chi variables are drawn as
    norms of 2(N-k) standard Gaussians. Draw order is fixed: the diagonal,
    then k = 1..N-1.
    """
    n = int(config.size)
    rng = config.rng()
    diag = rng.standard_normal(n) * math.sqrt(2.0)
    off = np.empty(n - 1)
    for k in range(1, n):
        g = rng.standard_normal(2 * (n - k))
        off[k - 1] = math.sqrt(float(np.dot(g, g)))
    return diag / math.sqrt(2.0), off / math.sqrt(2.0)


def _resolve_collisions(u):
    """Make ``u`` strictly increasing and positive; returns (u, adjustments)."""
    u = u.copy()
    adjusted = 0
    floor = COLLISION_STEP
    low = u <= 0.0
    if np.any(low):
        adjusted += int(low.sum())
        u[low] = floor
    i = 0
    while i < u.size:
        j = i
        while j + 1 < u.size and u[j + 1] <= u[i]:
            j += 1
        if j > i:
            run = j - i + 1
            center = u[i]
            offsets = (np.arange(run) - 0.5 * (run - 1)) * COLLISION_STEP
            u[i:j + 1] = center + offsets
            adjusted += run
        i = j + 1
    if u[0] <= 0.0:
        u += floor - u[0]
    return u, adjusted


def gue_spectrum(config: EnsembleConfig) -> Spectrum:
    """GUE eigenvalues unfolded to unit mean spacing on (0, N).

    Eigenvalues of the tridiagonal model are scaled by 1/sqrt(N) onto the
    semicircle support [-2, 2] and mapped through the integrated
    semicircle law.
    """
    if config.ensemble != "gue":
        raise ValueError("config.ensemble must be 'gue'")
    n = int(config.size)
    diag, off = gue_tridiagonal(config)
    lam = tridiagonal_eigenvalues(diag, off)
    u, adjusted = _resolve_collisions(semicircle_cdf(lam / math.sqrt(n), n))
    label = f"gue:{n}:{config.seed}"
    if adjusted:
        label += f":perturbed={adjusted}"
    return Spectrum(u, _ones(n), label)


def nearest_neighbor_gaps(spec: Spectrum, bulk=0.8):
    """Consecutive gaps from the central ``bulk`` fraction of the values."""
    v = spec.values
    cut = int(round(0.5 * (1.0 - bulk) * v.size))
    core = v[cut:v.size - cut]
    return np.diff(core)


_erf = np.vectorize(math.erf, otypes=[np.float64])


def wigner_surmise_cdf(s):
    """CDF of the GUE surmise (32/pi^2) s^2 exp(-4 s^2 / pi)."""
    s = np.asarray(s, dtype=np.float64)
    return _erf(2.0 * s / math.sqrt(math.pi)) - 4.0 * s / math.pi * np.exp(-4.0 * s * s / math.pi)


def write_spectrum(spec: Spectrum, path, comments=()):
    """CSV with header "value,multiplicity"; comments precede it as '# ...' lines."""
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    buf.write(f"# label={spec.label}\n")
    buf.write("value,multiplicity\n")
    for v, m in zip(spec.values, spec.multiplicities):
        buf.write(f"{float(v)!r},{int(m)}\n")
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def read_spectrum(path) -> Spectrum:
    path = Path(path)
    label = path.stem
    rows = []
    with path.open(encoding="utf-8", newline="") as fh:
        lines = []
        for line in fh:
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("label="):
                    label = body[len("label="):]
                continue
            lines.append(line)
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["value", "multiplicity"]:
        raise ValueError(f"{path}: expected header 'value,multiplicity'")
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 2:
            raise ValueError(f"{path}: row {lineno} needs two fields")
        rows.append((float(row[0]), int(row[1])))
    if not rows:
        raise ValueError(f"{path}: no spectrum rows")
    values, mults = zip(*rows)
    return Spectrum(np.array(values), np.array(mults), label)
