"""Independent reference implementations used only by the tests.

None of these share code with the package's kernels. Eigenvalues come from
Sturm-sequence bisection and spectral dimensions from finite differences
of ln Z; torus spectra are enumerated point by point.
"""
import itertools
import math

import numpy as np


def sturm_count(diag, off, x):
    """Number of eigenvalues of the symmetric tridiagonal matrix below x."""
    count = 0
    q = 1.0
    for i, d in enumerate(diag):
        b2 = off[i - 1] ** 2 if i > 0 else 0.0
        q = d - x - (b2 / q if i > 0 else 0.0)
        if q == 0.0:
            q = -1e-300
        if q < 0.0:
            count += 1
    return count


def sturm_eigenvalues(diag, off, tol=1e-13):
    """All eigenvalues by bisection on the Sturm count, ascending."""
    diag = [float(x) for x in diag]
    off = [float(x) for x in off]
    n = len(diag)
    # Gershgorin bounds
    radius = [abs(off[i - 1]) if i > 0 else 0.0 for i in range(n)]
    for i in range(n - 1):
        radius[i] += abs(off[i])
    lo = min(d - r for d, r in zip(diag, radius)) - 1.0
    hi = max(d + r for d, r in zip(diag, radius)) + 1.0
    out = []
    for k in range(n):
        a, b = lo, hi
        while b - a > tol * max(1.0, abs(a) + abs(b)):
            m = 0.5 * (a + b)
            if m <= a or m >= b:
                break
            if sturm_count(diag, off, m) > k:
                b = m
            else:
                a = m
        out.append(0.5 * (a + b))
    return np.array(out)


def log_trace(values, mults, lam):
    """ln sum m exp(-(u/lam)^2) with a log-sum-exp shift."""
    expo = -(np.asarray(values, dtype=float) / lam) ** 2
    top = expo.max()
    return top + math.log(math.fsum(np.asarray(mults, dtype=float) * np.exp(expo - top)))


def fd_spectral_dimension(values, mults, lam, h=1e-4):
    """Central difference of ln Z over ln lambda, fourth order."""
    f = lambda s: log_trace(values, mults, lam * math.exp(s))
    return (8.0 * (f(h) - f(-h)) - (f(2 * h) - f(-2 * h))) / (12.0 * h)


def brute_torus(d, n_max):
    """{|k| : 0 < |k|_inf <= n_max} in Z^d with multiplicities, by enumeration."""
    counts = {}
    for k in itertools.product(range(-n_max, n_max + 1), repeat=d):
        s = sum(x * x for x in k)
        if s:
            counts[s] = counts.get(s, 0) + 1
    keys = sorted(counts)
    return np.sqrt(np.array(keys, dtype=float)), np.array([counts[s] for s in keys])
