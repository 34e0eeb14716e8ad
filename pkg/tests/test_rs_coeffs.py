"""Frozen remainder table against the classical closed forms for C_0..C_4."""
import mpmath as mp
import pytest

from zetadim._rs_coeffs import RS_COEFFS

mp.mp.dps = 40


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def closed_form(k, p):
    pi = mp.pi
    d = lambda m: mp.diff(psi, p, m)
    if k == 0:
        return psi(p)
    if k == 1:
        return -d(3) / (96 * pi ** 2)
    if k == 2:
        return d(2) / (64 * pi ** 2) + d(6) / (18432 * pi ** 4)
    if k == 3:
        return -d(1) / (64 * pi ** 2) - d(5) / (3840 * pi ** 4) - d(9) / (5308416 * pi ** 6)
    return (psi(p) / (128 * pi ** 2) + 19 * d(4) / (24576 * pi ** 4)
            + 11 * d(8) / (5898240 * pi ** 6) + d(12) / (2038431744 * pi ** 8))


def table_value(k, p):
    z = float(p) - 0.5
    acc = 0.0
    for c in reversed(RS_COEFFS[k]):
        acc = acc * z * z + c
    return acc * z if k % 2 else acc


@pytest.mark.parametrize("k", range(5))
@pytest.mark.parametrize("p", ["0.05", "0.2", "0.37", "0.5", "0.61", "0.9"])
def test_low_orders_match_closed_forms(k, p):
    p = mp.mpf(p)
    assert table_value(k, p) == pytest.approx(float(closed_form(k, p)), abs=1e-14)


def test_parity_and_shape():
    assert len(RS_COEFFS) == 9
    assert all(len(poly) <= 64 for poly in RS_COEFFS)
    # odd orders carry a factor z and vanish at z = 0
    for k in (1, 3, 5, 7):
        assert table_value(k, mp.mpf("0.5")) == 0.0
