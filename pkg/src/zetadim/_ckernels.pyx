# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` operation for operation."""
from libc.math cimport cos, exp, fabs, log, sqrt
from libc.stdlib cimport free, malloc

from ._rs_coeffs import RS_COEFFS

cdef double TWO_PI = 2.0 * 3.141592653589793
cdef double PI_8 = 3.141592653589793 / 8.0

cdef enum:
    MAX_ORDER = 8
    MAX_LEN = 64

cdef double _coef[MAX_ORDER + 1][MAX_LEN]
cdef int _coef_len[MAX_ORDER + 1]


def _load_coefficients():
    cdef int k, i
    for k in range(MAX_ORDER + 1):
        poly = RS_COEFFS[k]
        if len(poly) > MAX_LEN:
            raise RuntimeError("remainder polynomial longer than MAX_LEN")
        _coef_len[k] = len(poly)
        for i in range(len(poly)):
            _coef[k][i] = poly[i]


_load_coefficients()


cdef inline double _theta(double t) nogil:
    cdef double lt = log(t / TWO_PI)
    return (0.5 * t * lt - 0.5 * t - PI_8
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t))


cdef double _rs_z(double t, int order) nogil:
    cdef double th = _theta(t)
    cdef double tau = t / TWO_PI
    cdef double root = sqrt(tau)
    cdef long n_main = <long>root
    cdef double acc = 0.0
    cdef long n
    cdef int k, i
    cdef double p, z, w, a, rem, ak, c
    for n in range(1, n_main + 1):
        acc += cos(th - t * log(<double>n)) / sqrt(<double>n)
    acc *= 2.0

    p = root - n_main
    z = p - 0.5
    w = z * z
    a = 1.0 / root
    rem = 0.0
    ak = 1.0
    for k in range(order + 1):
        c = 0.0
        for i in range(_coef_len[k] - 1, -1, -1):
            c = c * w + _coef[k][i]
        if k % 2 == 1:
            c *= z
        rem += c * ak
        ak *= a
    rem *= 1.0 / sqrt(root)
    if n_main % 2 == 0:
        rem = -rem
    return acc + rem


def theta(double t):
    return _theta(t)


def rs_z(double t, int order):
    return _rs_z(t, order)


def bisect_rs_z(double a, double b, double za, int order, double tol):
    cdef double zb, m, zm
    cdef bint hit = False
    with nogil:
        zb = _rs_z(b, order)
        while 0.5 * (b - a) > tol:
            m = 0.5 * (a + b)
            if m <= a or m >= b:
                break
            zm = _rs_z(m, order)
            if zm == 0.0:
                hit = True
                break
            if (zm < 0.0) == (za < 0.0):
                a = m
                za = zm
            else:
                b = m
                zb = zm
    if hit:
        return m, m, 0.0, 0.0
    return a, b, za, zb


cdef void _gauss_sums(const double[:] values, const double[:] mults, double lam,
                      double* out_s, double* out_m, double* out_q) nogil:
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t k
    cdef double x0 = values[0] / lam
    cdef double q0 = x0 * x0
    cdef double s = 0.0, cs = 0.0, m = 0.0, cm = 0.0
    cdef double x, q, e, mk, term, t
    for k in range(n):
        x = values[k] / lam
        q = x * x
        e = exp(q0 - q)
        if e == 0.0:
            break
        mk = mults[k]
        term = mk * e
        t = s + term
        if fabs(s) >= fabs(term):
            cs += (s - t) + term
        else:
            cs += (term - t) + s
        s = t
        term = mk * q * e
        t = m + term
        if fabs(m) >= fabs(term):
            cm += (m - t) + term
        else:
            cm += (term - t) + m
        m = t
    out_s[0] = s + cs
    out_m[0] = m + cm
    out_q[0] = q0


def gauss_sums(const double[:] values, const double[:] mults, double lam):
    cdef double s, m, q
    with nogil:
        _gauss_sums(values, mults, lam, &s, &m, &q)
    return s, m, q


def gauss_sums_grid(const double[:] values, const double[:] mults, const double[:] lams):
    cdef Py_ssize_t j, npts = lams.shape[0]
    cdef double s, m, q
    out_s = [0.0] * npts
    out_m = [0.0] * npts
    out_q = [0.0] * npts
    for j in range(npts):
        with nogil:
            _gauss_sums(values, mults, lams[j], &s, &m, &q)
        out_s[j] = s
        out_m[j] = m
        out_q[j] = q
    return out_s, out_m, out_q


cdef inline double _pythag(double a, double b) nogil:
    cdef double absa = fabs(a), absb = fabs(b), r
    if absa > absb:
        r = absb / absa
        return absa * sqrt(1.0 + r * r)
    if absb == 0.0:
        return 0.0
    r = absa / absb
    return absb * sqrt(1.0 + r * r)


cdef inline double _copysign(double a, double b) nogil:
    return fabs(a) if b >= 0.0 else -fabs(a)


cdef int _tql(double* d, double* e, Py_ssize_t n, int max_iter) nogil:
    cdef Py_ssize_t l, m, i
    cdef int it, underflow
    cdef double dd, g, r, s, c, p, f, b
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            if it == max_iter:
                return -1
            it += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = _pythag(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + _copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = 0
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = _pythag(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = 1
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
    return 0


def tql_eigenvalues(diag, offdiag, int max_iter):
    cdef Py_ssize_t n = len(diag), i
    cdef int status
    cdef double* d = <double*>malloc(n * sizeof(double))
    cdef double* e = <double*>malloc(n * sizeof(double))
    if d == NULL or e == NULL:
        free(d)
        free(e)
        raise MemoryError()
    try:
        for i in range(n):
            d[i] = diag[i]
        for i in range(n - 1):
            e[i] = offdiag[i]
        e[n - 1] = 0.0
        with nogil:
            status = _tql(d, e, n, max_iter)
        if status != 0:
            return None
        return [d[i] for i in range(n)]
    finally:
        free(d)
        free(e)
