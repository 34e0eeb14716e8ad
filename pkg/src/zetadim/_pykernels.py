"""Pure-Python hot kernels.

Every function here has a twin in ``_ckernels.pyx`` that performs the same
floating-point operations in the same order, so the two backends agree to
the last bit (both call the C library's exp/cos/log/sqrt).
"""
import math

from ._rs_coeffs import RS_COEFFS

TWO_PI = 2.0 * math.pi
PI_8 = math.pi / 8.0


def theta(t):
    lt = math.log(t / TWO_PI)
    return (0.5 * t * lt - 0.5 * t - PI_8
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t))


def _horner(poly, w):
    acc = 0.0
    for i in range(len(poly) - 1, -1, -1):
        acc = acc * w + poly[i]
    return acc


def rs_z(t, order):
    th = theta(t)
    tau = t / TWO_PI
    root = math.sqrt(tau)
    n_main = int(root)
    acc = 0.0
    for n in range(1, n_main + 1):
        acc += math.cos(th - t * math.log(float(n))) / math.sqrt(float(n))
    acc *= 2.0

    p = root - n_main
    z = p - 0.5
    w = z * z
    a = 1.0 / root
    rem = 0.0
    ak = 1.0
    for k in range(order + 1):
        c = _horner(RS_COEFFS[k], w)
        if k % 2 == 1:
            c *= z
        rem += c * ak
        ak *= a
    rem *= 1.0 / math.sqrt(root)
    if n_main % 2 == 0:
        rem = -rem
    return acc + rem


def bisect_rs_z(a, b, za, order, tol):
    """Shrink a sign-change bracket of rs_z to half-width <= tol.

    Returns (lo, hi, z_lo, z_hi); lo == hi when an exact zero is hit.
    """
    zb = rs_z(b, order)
    while 0.5 * (b - a) > tol:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        zm = rs_z(m, order)
        if zm == 0.0:
            return m, m, 0.0, 0.0
        if (zm < 0.0) == (za < 0.0):
            a = m
            za = zm
        else:
            b = m
            zb = zm
    return a, b, za, zb


def gauss_sums(values, mults, lam):
    """Neumaier-compensated sums of m*e and m*q*e with e = exp(q0 - q), q = (u/lam)^2.

    The shift by q0 (first, smallest value) keeps the sums away from underflow;
    the common factor exp(-q0) cancels in the log-derivative.
    """
    n = len(values)
    x0 = values[0] / lam
    q0 = x0 * x0
    s = 0.0
    cs = 0.0
    m = 0.0
    cm = 0.0
    for k in range(n):
        x = values[k] / lam
        q = x * x
        e = math.exp(q0 - q)
        if e == 0.0:
            break
        mk = float(mults[k])
        term = mk * e
        t = s + term
        if abs(s) >= abs(term):
            cs += (s - t) + term
        else:
            cs += (term - t) + s
        s = t
        term = mk * q * e
        t = m + term
        if abs(m) >= abs(term):
            cm += (m - t) + term
        else:
            cm += (term - t) + m
        m = t
    return s + cs, m + cm, q0


def gauss_sums_grid(values, mults, lams):
    out_s = []
    out_m = []
    out_q = []
    for lam in lams:
        s, m, q0 = gauss_sums(values, mults, lam)
        out_s.append(s)
        out_m.append(m)
        out_q.append(q0)
    return out_s, out_m, out_q


def _pythag(a, b):
    absa = abs(a)
    absb = abs(b)
    if absa > absb:
        r = absb / absa
        return absa * math.sqrt(1.0 + r * r)
    if absb == 0.0:
        return 0.0
    r = absa / absb
    return absb * math.sqrt(1.0 + r * r)


def _copysign(a, b):
    return abs(a) if b >= 0.0 else -abs(a)


def tql_eigenvalues(diag, offdiag, max_iter):
    """Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues only.

    Returns the unsorted eigenvalues, or None if some eigenvalue needed more
    than ``max_iter`` sweeps.
    """
    n = len(diag)
    d = [float(x) for x in diag]
    e = [float(x) for x in offdiag] + [0.0]
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            if it == max_iter:
                return None
            it += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = _pythag(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + _copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = _pythag(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d
