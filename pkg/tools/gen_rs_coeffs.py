"""Regenerate src/zetadim/_rs_coeffs.py.

The Riemann-Siegel remainder of Z(t) is

    (-1)**(N-1) * tau**(-1/4) * sum_k C_k(z) * tau**(-k/2),  tau = t / (2 pi),

with z = frac(sqrt(tau)) - 1/2. The C_k are built from the Taylor series of

    F(p) = (exp(pi i (p^2/2 + 3/8)) - i sqrt(2) cos(pi p / 2)) / (2 cos(pi p))

through the d[n, k] recursion of Arias de Reyna (as used by mpmath's
rszeta), then folded with exp(i (theta - theta_0)) so that the
result applies to Z rather than to zeta. C_0..C_4 agree with the classical
closed forms in terms of derivatives of cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
(checked in tests/test_rs_coeffs.py).

Series arithmetic runs in mpmath at high precision: the division by the
cos(pi p) series cancels heavily.

    python tools/gen_rs_coeffs.py > src/zetadim/_rs_coeffs.py
"""
import mpmath as mp

mp.mp.dps = 300
NTERMS = 240
MAX_ORDER = 8
CUTOFF = mp.mpf("1e-19")


def series_div(num, den, n):
    out = [mp.mpc(0)] * n
    for i in range(n):
        acc = num[i] - mp.fsum(den[j] * out[i - j] for j in range(1, i + 1))
        out[i] = acc / den[0]
    return out


def f_series(n):
    pi = mp.pi
    num = [mp.mpc(0)] * n
    den = [mp.mpc(0)] * n
    e38 = mp.expjpi(mp.mpf(3) / 8)
    for k in range(0, (n + 1) // 2):
        num[2 * k] += e38 * (1j * pi / 2) ** k / mp.factorial(k)
        num[2 * k] += -1j * mp.sqrt(2) * (-1) ** k * (pi / 2) ** (2 * k) / mp.factorial(2 * k)
        den[2 * k] = 2 * (-1) ** k * pi ** (2 * k) / mp.factorial(2 * k)
    return series_div(num, den, n)


def deriv(c, m):
    return [c[i + m] * mp.factorial(i + m) / mp.factorial(i) for i in range(len(c) - m)]


def d_table(order):
    d = {(0, 0): mp.mpf(1)}
    for n in range(1, order + 1):
        for k in range(0, 3 * n // 2 + 1):
            m = 3 * n - 2 * k
            if m != 0:
                d[n, k] = -(m + 1) * d.get((n - 1, k - 2), 0) + d.get((n - 1, k), 0) / (4 * m)
            else:
                d[n, k] = -mp.fsum((-1) ** (k - r) * d[n, r] * mp.factorial(2 * k - 2 * r)
                                   / mp.factorial(k - r) for r in range(k))
    return d


def theta_shift_exp(order):
    """Series in x = tau**(-1/2) of exp(i (theta(t) - theta_0(t)))."""
    delta = [mp.mpf(0)] * (order + 1)
    j = 1
    while 4 * j - 2 <= order:
        beta = (1 - mp.mpf(2) ** (1 - 2 * j)) * abs(mp.bernoulli(2 * j)) / (4 * j * (2 * j - 1))
        delta[4 * j - 2] += beta / (2 * mp.pi) ** (2 * j - 1)
        j += 1
    out = [mp.mpc(1)] + [mp.mpc(0)] * order
    term = list(out)
    for r in range(1, order + 1):
        new = [mp.mpc(0)] * (order + 1)
        for a in range(order + 1):
            for b in range(order + 1 - a):
                new[a + b] += term[a] * 1j * delta[b]
        term = [x / r for x in new]
        out = [out[i] + term[i] for i in range(order + 1)]
    return out


def remainder_series(order=MAX_ORDER, nterms=NTERMS):
    f = f_series(nterms)
    d = d_table(order)
    t_k = []
    for k in range(order + 1):
        acc = None
        for ell in range(0, 3 * k // 2 + 1):
            w = d[k, ell] / (mp.pi ** (2 * k - ell) * (2j) ** ell)
            part = [w * c for c in deriv(f, 3 * k - 2 * ell)]
            acc = part if acc is None else [x + y for x, y in zip(acc, part)]
        t_k.append(acc)
    e = theta_shift_exp(order)
    out = []
    for k in range(order + 1):
        n = min(len(t_k[j]) for j in range(k + 1))
        ser = [mp.fsum(2 * mp.re(e[k - j] * t_k[j][i]) for j in range(k + 1)) for i in range(n)]
        # F is expanded in p = 1 - 2 frac = -2 z
        out.append([ser[i] * (-2) ** i for i in range(n)])
    return out


def main():
    series = remainder_series()
    print('"""Riemann-Siegel remainder coefficients, generated by tools/gen_rs_coeffs.py.')
    print()
    print("RS_COEFFS[k] holds C_k as a polynomial in w = z*z (z = frac(sqrt(t/2pi)) - 1/2),")
    print("lowest power first. Odd k carry an extra factor z. Do not edit by hand.")
    print('"""')
    print()
    print("RS_COEFFS = (")
    for k, s in enumerate(series):
        poly = s[k % 2::2]
        last = max(i for i, a in enumerate(poly) if abs(a) * mp.mpf(4) ** (-i) > CUTOFF)
        if last > len(poly) - 5:
            raise RuntimeError(f"C_{k} series not converged; raise NTERMS")
        print("    (")
        for a in poly[: last + 1]:
            print(f"        {float(a)!r},")
        print("    ),")
    print(")")


if __name__ == "__main__":
    main()
