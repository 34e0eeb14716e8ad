"""The compiled and pure-Python kernels must agree bit for bit."""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zetadim import _pykernels

ck = pytest.importorskip("zetadim._ckernels")

heights = st.floats(min_value=10.0, max_value=1e6, allow_nan=False)


@settings(max_examples=300, deadline=None)
@given(heights, st.integers(min_value=0, max_value=8))
def test_rs_z_bit_identical(t, order):
    assert ck.rs_z(t, order) == _pykernels.rs_z(t, order)


@settings(max_examples=200, deadline=None)
@given(heights)
def test_theta_bit_identical(t):
    assert ck.theta(t) == _pykernels.theta(t)


def test_bisection_bit_identical():
    for a, b in [(14.0, 14.3), (20.9, 21.1), (9876.5, 9878.5)]:
        za = _pykernels.rs_z(a, 8)
        if (za < 0) == (_pykernels.rs_z(b, 8) < 0):
            continue
        assert ck.bisect_rs_z(a, b, za, 8, 1e-9) == _pykernels.bisect_rs_z(a, b, za, 8, 1e-9)


def test_gauss_sums_bit_identical():
    rng = np.random.default_rng(5)
    values = np.sort(rng.uniform(0.1, 500.0, 3000))
    mults = rng.integers(1, 5, values.size).astype(float)
    lams = np.geomspace(0.01, 5000.0, 40)
    c = ck.gauss_sums_grid(values, mults, lams)
    p = _pykernels.gauss_sums_grid(values.tolist(), mults.tolist(), lams.tolist())
    assert c == p
    assert ck.gauss_sums(values, mults, 7.0) == _pykernels.gauss_sums(values.tolist(), mults.tolist(), 7.0)


def test_tql_bit_identical():
    rng = np.random.default_rng(11)
    for n in (1, 2, 7, 64):
        d = rng.normal(size=n).tolist()
        e = rng.normal(size=n - 1).tolist()
        assert ck.tql_eigenvalues(d, e, 50) == _pykernels.tql_eigenvalues(d, e, 50)


def test_tql_cap_reported(kernel_module):
    # a zero sweep budget cannot converge a coupled matrix
    assert kernel_module.tql_eigenvalues([1.0, 2.0], [0.5], 0) is None


def test_backend_selection_env(monkeypatch):
    import importlib

    import zetadim._backend as backend
    monkeypatch.setenv("ZETADIM_BACKEND", "python")
    mod = importlib.reload(backend)
    try:
        assert mod.BACKEND == "python" and mod.kernels is _pykernels
    finally:
        monkeypatch.delenv("ZETADIM_BACKEND")
        importlib.reload(backend)


def test_theta_matches_series_by_hand():
    t = 1234.5
    x = t / (2 * math.pi)
    expected = 0.5 * t * math.log(x) - 0.5 * t - math.pi / 8 + 1 / (48 * t) + 7 / (5760 * t ** 3)
    assert _pykernels.theta(t) == pytest.approx(expected, abs=1e-9)
