"""Nontrivial zeta zeros on the critical line.

Zeros are located as sign changes of the Riemann-Siegel Z function,
bracketed by Gram points grouped into Rosser blocks, and refined by
bisection. An Euler-Maclaurin evaluator of zeta(1/2 + it) serves as an
independent oracle, and tabulated zeros (e.g. Odlyzko's tables) can be
imported from plain text files.
"""
from __future__ import annotations

import cmath
import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path

import numpy as np

from ._backend import kernels
from ._rs_coeffs import RS_COEFFS

__all__ = [
    "MAX_CORRECTION_TERMS",
    "ZERO_SEARCH_ORDER",
    "RS_ERROR_BOUNDS",
    "ZeroSource",
    "ZeroTable",
    "CountingReport",
    "MissedZeroError",
    "ZeroFileError",
    "rs_theta",
    "rs_z",
    "gram_point",
    "reference_zeta_half_line",
    "reference_theta",
    "reference_z",
    "reference_zero_sweep",
    "find_zeros",
    "count_estimate",
    "import_zero_file",
    "write_zero_file",
    "cached_zeros",
]

MAX_CORRECTION_TERMS = len(RS_COEFFS) - 1
# C_0..C_4 alone leave ~3e-6 error on the lowest zeros
ZERO_SEARCH_ORDER = 8
BISECTION_TOL = 1e-9
MAX_TRISECTION_DEPTH = 20
T_GUARD = 1e6
T_MIN = 10.0
# worst |rs_z - Z| over t >= 10 per correction order, measured against a
# 30-digit evaluation on [10, 200] and rounded up; the error falls off like
# tau^(-k/2 - 3/4) above that range. Order 8 is slightly worse than 7 near
# t = 10, where the asymptotic series starts to diverge.
RS_ERROR_BOUNDS = (1.2e-2, 3e-3, 2.5e-4, 1e-4, 1.6e-5, 3e-6, 2e-6, 1e-7, 3e-7)
# first zero is near 14.1347
FIRST_ZERO_FLOOR = 14.0


class ZeroSource(str, enum.Enum):
    COMPUTED = "computed"
    IMPORTED = "imported"


class MissedZeroError(RuntimeError):
    """Zero count after bracketing disagrees with the smooth counting law."""


class ZeroFileError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class ZeroTable:
    """Ordered positive zero heights t_j with provenance.

    ``abs_error_bound`` is the guaranteed bracket half-width for computed
    zeros, or half the last printed decimal place for imported ones.
    """

    heights: np.ndarray
    source: ZeroSource
    abs_error_bound: float
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        h = np.ascontiguousarray(self.heights, dtype=np.float64)
        h.setflags(write=False)
        object.__setattr__(self, "heights", h)
        object.__setattr__(self, "source", ZeroSource(self.source))
        if h.ndim != 1 or h.size == 0:
            raise ValueError("a zero table needs at least one height")
        if not np.all(np.isfinite(h)):
            raise ValueError("zero heights must be finite")
        if h[0] <= FIRST_ZERO_FLOOR:
            raise ValueError(f"height {h[0]!r} lies below the first zeta zero")
        gaps = np.diff(h)
        if np.any(gaps <= 0):
            i = int(np.argmax(gaps <= 0))
            raise ValueError(f"heights not strictly increasing at index {i + 1}")
        if np.any(gaps <= 2 * self.abs_error_bound):
            raise ValueError("two heights coincide within abs_error_bound")

    def __len__(self):
        return self.heights.size

    def __eq__(self, other):
        if not isinstance(other, ZeroTable):
            return NotImplemented
        return (self.source == other.source
                and self.abs_error_bound == other.abs_error_bound
                and np.array_equal(self.heights, other.heights))

    def head(self, n):
        """The first ``n`` zeros as a new table."""
        if not 1 <= n <= len(self):
            raise ValueError(f"prefix size {n} outside 1..{len(self)}")
        return ZeroTable(self.heights[:n], self.source, self.abs_error_bound,
                         dict(self.metadata))

    def count_below(self, t):
        return int(np.searchsorted(self.heights, t, side="right"))


@dataclass(frozen=True)
class CountingReport:
    T: float
    found: int | None
    smooth_estimate: float
    density_at_T: float

    @property
    def deviation(self):
        return None if self.found is None else self.found - self.smooth_estimate


def _check_height(t):
    t = float(t)
    if not t >= T_MIN:
        raise ValueError(f"t = {t!r} is below {T_MIN}: the asymptotic theta series does not apply")
    return t


def rs_theta(t):
    """Riemann-Siegel theta from its asymptotic series.

    theta(t) = (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48 t) + 7/(5760 t^3).
    The truncation error is about 31/(80640 t^5): 3.9e-9 at t = 10, below
    1e-9 from t = 13.1 on.
    """
    return kernels.theta(_check_height(t))


def rs_z(t, correction_terms=2):
    """Hardy's Z(t) by the Riemann-Siegel formula; |Z(t)| = |zeta(1/2 + it)|.

    ``correction_terms`` is the highest remainder order C_k kept (0..8);
    ``RS_ERROR_BOUNDS[k]`` bounds the absolute error for t >= 10. With
    order 8 the error is below 3e-7 there; above t = 1000 it is set by
    rounding in t ln n, about 1e-13 at t = 1000 and 4e-12 at t = 1e4.
    """
    t = _check_height(t)
    k = int(correction_terms)
    if not 0 <= k <= MAX_CORRECTION_TERMS:
        raise ValueError(f"correction_terms must lie in 0..{MAX_CORRECTION_TERMS}")
    return kernels.rs_z(t, k)


def _theta_prime(t):
    return 0.5 * math.log(t / (2.0 * math.pi)) - 1.0 / (48.0 * t * t)


def gram_point(n, guess=None):
    """Solve theta(g) = n pi by Newton's method (n >= 0)."""
    target = n * math.pi
    if guess is None:
        # theta(t) ~ (t/2) ln(t / (2 pi e)) - pi/8, inverted with Lambert W
        c = (n + 0.125) / math.e
        w = math.log1p(c)
        for _ in range(60):
            ew = math.exp(w)
            w -= (w * ew - c) / (ew * (w + 1.0))
        g = 2.0 * math.pi * math.e * c / w
    else:
        g = guess
    for _ in range(100):
        step = (kernels.theta(g) - target) / _theta_prime(g)
        g -= step
        if abs(step) < 1e-13 * g:
            break
    return g


# Euler-Maclaurin oracle

def _bernoulli_ratios(count):
    """B_{2k} / (2k)! for k = 1..count, from the Akiyama-Tanigawa algorithm."""
    nmax = 2 * count
    a = [Fraction(0)] * (nmax + 1)
    bern = []
    for m in range(nmax + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        bern.append(a[0])
    return [float(bern[2 * k] / math.factorial(2 * k)) for k in range(1, count + 1)]


_EM_RATIOS = _bernoulli_ratios(20)
_EM_MIN_TERMS = 6


def reference_zeta_half_line(t):
    """zeta(1/2 + it) by Euler-Maclaurin summation.

    Uses N = ceil(10 + |t|) direct terms and at least six Bernoulli
    corrections; every partial sum goes through ``math.fsum``. Absolute
    error is below 1e-9 for |t| <= 1e4.
    """
    t = float(t)
    s = complex(0.5, t)
    n_terms = int(math.ceil(10.0 + abs(t)))
    logs = np.log(np.arange(1, n_terms, dtype=np.float64))
    mag = np.exp(-0.5 * logs)
    phase = t * logs
    re_parts = list(mag * np.cos(phase))
    im_parts = list(-mag * np.sin(phase))

    big_n = float(n_terms)
    n_pow = cmath.exp(-s * math.log(big_n))  # N^{-s}
    tail = big_n * n_pow / (s - 1.0) + 0.5 * n_pow
    re_parts.append(tail.real)
    im_parts.append(tail.imag)

    poch = s
    power = n_pow / big_n  # N^{-s-1}
    inv_n2 = 1.0 / (big_n * big_n)
    for k, ratio in enumerate(_EM_RATIOS, start=1):
        term = ratio * poch * power
        re_parts.append(term.real)
        im_parts.append(term.imag)
        if k >= _EM_MIN_TERMS and abs(term) < 1e-18:
            break
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        power *= inv_n2
    return complex(math.fsum(re_parts), math.fsum(im_parts))


_STIRLING = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
             Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510)]


def _loggamma(z):
    shift = 0j
    while abs(z) < 20.0:
        shift += cmath.log(z)
        z += 1.0
    acc = (z - 0.5) * cmath.log(z) - z + 0.5 * math.log(2.0 * math.pi)
    zpow = z
    z2 = z * z
    for j, b in enumerate(_STIRLING, start=1):
        acc += float(b) / (2 * j * (2 * j - 1)) / zpow
        zpow *= z2
    return acc - shift


def reference_theta(t):
    """theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln pi, via Stirling with shifts."""
    t = float(t)
    return _loggamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * math.log(math.pi)


def reference_z(t):
    """Z(t) from the Euler-Maclaurin oracle and the log-Gamma theta."""
    return (cmath.exp(1j * reference_theta(t)) * reference_zeta_half_line(t)).real


def _bisect(f, a, b, fa, tol):
    while 0.5 * (b - a) > tol:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def reference_zero_sweep(t_lo, t_hi, step=0.05, tol=1e-10):
    """Zeros of the oracle Z on [t_lo, t_hi] from a fixed-step sign scan.

    Independent of the Riemann-Siegel path. Pairs of zeros closer than
    ``step`` are missed, so choose ``step`` well below the local spacing.
    """
    n = int(math.ceil((t_hi - t_lo) / step))
    grid = [t_lo + i * (t_hi - t_lo) / n for i in range(n + 1)]
    values = [reference_z(x) for x in grid]
    found = []
    for a, b, fa, fb in zip(grid, grid[1:], values, values[1:]):
        if fa == 0.0:
            found.append(a)
        elif (fa < 0.0) != (fb < 0.0) and fb != 0.0:
            found.append(_bisect(reference_z, a, b, fa, tol))
    return np.array(found)


# Zero search

def _sign(z):
    return z >= 0.0


def _block_sign_changes(points):
    return sum(1 for (_, za), (_, zb) in zip(points, points[1:]) if _sign(za) != _sign(zb))


def _resolve_block(points, expected, order):
    """Trisect a Rosser block until it shows ``expected`` sign changes."""
    depth = 0
    while _block_sign_changes(points) < expected:
        if depth == MAX_TRISECTION_DEPTH:
            lo, hi = points[0][0], points[-1][0]
            raise MissedZeroError(
                f"missed zero: block [{lo:.9f}, {hi:.9f}] shows "
                f"{_block_sign_changes(points)} sign changes, expected {expected}")
        refined = [points[0]]
        for (a, za), (b, zb) in zip(points, points[1:]):
            if _sign(za) == _sign(zb) or depth > 0:
                h = (b - a) / 3.0
                for x in (a + h, a + 2.0 * h):
                    refined.append((x, kernels.rs_z(x, order)))
            refined.append((b, zb))
        points = refined
        depth += 1
    if _block_sign_changes(points) > expected:
        raise MissedZeroError(
            f"block [{points[0][0]:.9f}, {points[-1][0]:.9f}] shows more sign changes than Gram intervals")
    return [(a, b, za) for (a, za), (b, zb) in zip(points, points[1:]) if _sign(za) != _sign(zb)]


def _brackets(count, t_max, order):
    """Sign-change brackets of Z covering zeros up to the stop criterion.

    Walks Gram points g_0, g_1, ... and groups them into Rosser blocks
    (runs between Gram points obeying (-1)^n Z(g_n) > 0). A block of m Gram
    intervals must hold m zeros. The point t = 10 stands in for g_{-1}.
    """
    brackets = []
    start = (T_MIN, kernels.rs_z(T_MIN, order))
    block = [start]
    n = 0
    g = gram_point(0)
    while True:
        z = kernels.rs_z(g, order)
        block.append((g, z))
        good = (z > 0.0) if n % 2 == 0 else (z < 0.0)
        if good:
            brackets.extend(_resolve_block(block, len(block) - 1, order))
            block = [(g, z)]
            done = len(brackets) >= count if count is not None else g >= t_max
            if done:
                return brackets, n, g
        n += 1
        g = gram_point(n, guess=g + math.pi / _theta_prime(g))
        if g > T_GUARD * 1.01:
            raise ValueError("zero search exceeded the t <= 1e6 guardrail")


def find_zeros(count=None, t_max=None, *, correction_terms=ZERO_SEARCH_ORDER,
               tol=BISECTION_TOL, workers=1):
    """The first zeros of zeta on the critical line, in increasing order.

    Exactly one of ``count`` (first N zeros) or ``t_max`` (all zeros with
    height <= t_max) must be given. Each zero is bisected on ``rs_z`` to a
    bracket half-width <= ``tol``; ``abs_error_bound`` records the largest
    half-width. Bisection of independent brackets can be spread over
    ``workers`` threads (the compiled kernel releases the GIL); the result
    does not depend on it.

    Raises MissedZeroError when bracketing cannot account for every zero
    predicted by the counting law.
    """
    if (count is None) == (t_max is None):
        raise ValueError("give exactly one of count or t_max")
    if count is not None:
        count = int(count)
        if not 1 <= count <= 1_000_000:
            raise ValueError("count must lie in 1..1e6")
    else:
        t_max = float(t_max)
        if not T_MIN < t_max <= T_GUARD:
            raise ValueError("t_max must lie in (10, 1e6]")
    order = int(correction_terms)
    if not 0 <= order <= MAX_CORRECTION_TERMS:
        raise ValueError(f"correction_terms must lie in 0..{MAX_CORRECTION_TERMS}")

    brackets, n_last, g_last = _brackets(count, t_max, order)

    # every zero in (0, g_n] is accounted for once block ends are good Gram points
    expected = round(count_estimate(g_last).smooth_estimate)
    if abs(len(brackets) - expected) > 1:
        raise MissedZeroError(
            f"missed zero: found {len(brackets)} zeros below {g_last:.6f}, "
            f"counting law predicts {expected}")

    def refine(bracket):
        a, b, za = bracket
        return kernels.bisect_rs_z(a, b, za, order, tol)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            refined = list(pool.map(refine, brackets))
    else:
        refined = [refine(br) for br in brackets]

    heights = np.array([0.5 * (lo + hi) for lo, hi, _, _ in refined])
    half_widths = np.array([0.5 * (hi - lo) for lo, hi, _, _ in refined])
    if count is not None:
        keep = count
    else:
        keep = int(np.searchsorted(heights, t_max, side="right"))
    bound = float(half_widths[:keep].max()) if keep else 0.0
    meta = {"correction_terms": order, "tol": tol, "gram_points": n_last + 1}
    if count is not None:
        meta["count"] = count
    else:
        meta["t_max"] = t_max
    return ZeroTable(heights[:keep], ZeroSource.COMPUTED, bound, meta)


def count_estimate(T, table=None):
    """Smooth zero count theta(T)/pi + 1 and the density ln(T/2pi)/(2pi) at T.

    ``found`` is filled from ``table`` when one is supplied.
    """
    T = _check_height(T)
    smooth = kernels.theta(T) / math.pi + 1.0
    density = math.log(T / (2.0 * math.pi)) / (2.0 * math.pi)
    found = table.count_below(T) if table is not None else None
    return CountingReport(T, found, smooth, density)


# Zero files

def _decimal_places(text):
    mantissa = text.lower().split("e")[0]
    exponent = int(text.lower().split("e")[1]) if "e" in text.lower() else 0
    places = len(mantissa.split(".")[1]) if "." in mantissa else 0
    return places - exponent


def import_zero_file(path):
    """Read a zero table: one decimal per line, optional "# offset <decimal>" header.

    Other comment lines are ignored, except the "# zetadim" metadata line
    this package writes, which restores source and error bound exactly.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    offset = Decimal(0)
    heights = []
    places = []
    restored = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if words and words[0] == "offset":
                if len(words) != 2 or heights:
                    raise ZeroFileError("malformed offset header", lineno)
                try:
                    offset = Decimal(words[1])
                except InvalidOperation:
                    raise ZeroFileError(f"bad offset {words[1]!r}", lineno) from None
            elif words and words[0] == "zetadim":
                restored = dict(w.split("=", 1) for w in words[1:] if "=" in w)
            continue
        try:
            value = Decimal(line)
        except InvalidOperation:
            raise ZeroFileError(f"cannot parse {line!r} as a decimal", lineno) from None
        if not value.is_finite():
            raise ZeroFileError(f"non-finite value {line!r}", lineno)
        h = float(offset + value)
        if heights and h <= heights[-1][0]:
            raise ZeroFileError(f"height {line} does not exceed the previous one", lineno)
        if h <= FIRST_ZERO_FLOOR:
            raise ZeroFileError(f"height {line} lies below the first zeta zero", lineno)
        heights.append((h, lineno))
        places.append(_decimal_places(line))
    if not heights:
        raise ZeroFileError("no heights in file")
    if restored is not None and "source" in restored and "abs_error_bound" in restored:
        source = ZeroSource(restored["source"])
        bound = float(restored["abs_error_bound"])
    else:
        source = ZeroSource.IMPORTED
        bound = 0.5 * 10.0 ** (-min(places))
    values = np.array([h for h, _ in heights])
    try:
        return ZeroTable(values, source, bound, {"path": str(path)})
    except ValueError as exc:
        raise ZeroFileError(str(exc)) from None


def write_zero_file(table, path, comments=()):
    """Write heights with shortest round-trip repr; comments go first as '# ...' lines."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"# zetadim source={table.source.value} abs_error_bound={table.abs_error_bound!r}")
    lines.extend(repr(float(h)) for h in table.heights)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def cached_zeros(count, cache_dir=None, *, correction_terms=ZERO_SEARCH_ORDER):
    """First ``count`` zeros, loaded from or stored under the cache root.

    Tables live at "<count>.zeros" (non-default orders add "-o<k>").
    """
    if cache_dir is None:
        cache_dir = os.environ.get("ZETADIM_CACHE", ".zetadim-cache")
    cache_dir = Path(cache_dir)
    name = f"{count}.zeros" if correction_terms == ZERO_SEARCH_ORDER \
        else f"{count}-o{correction_terms}.zeros"
    path = cache_dir / name
    if path.exists():
        table = import_zero_file(path)
        if len(table) == count and table.source is ZeroSource.COMPUTED:
            return table
    table = find_zeros(count=count, correction_terms=correction_terms)
    cache_dir.mkdir(parents=True, exist_ok=True)
    write_zero_file(table, path, comments=[f"count={count} correction_terms={correction_terms}"])
    return table
