import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

import zetadim.specdim as sd
from oracles import fd_spectral_dimension
from zetadim import _pykernels
from zetadim.spectra import Spectrum, circle_dirac, scale_zeros, sphere_dirac, torus_dirac
from zetadim.specdim import (DimensionCurve, LambdaGrid, PlateauReport, detect_plateau,
                             dimension_curve, format_plateau, heat_trace, log_heat_trace,
                             plateau_growth, read_curve, spectral_dimension, write_curve)


@st.composite
def spectra(draw, max_size=40):
    n = draw(st.integers(1, max_size))
    raw = draw(st.lists(st.floats(0.01, 100.0), min_size=n, max_size=n, unique=True))
    values = np.sort(np.array(raw))
    # keep values distinct after rescaling by any c in [0.01, 100]
    assume(np.all(np.diff(values) > 1e-9 * values[1:]))
    mults = draw(st.lists(st.integers(1, 6), min_size=n, max_size=n))
    return Spectrum(values, mults, "h")


def _grid_lam(spec, frac):
    lo, hi = math.log(spec.u_min / 10), math.log(10 * spec.u_max)
    return math.exp(lo + frac * (hi - lo))


def test_single_eigenvalue():
    s = Spectrum([3.0], [1])
    assert spectral_dimension(s, 3.0) == 2.0
    for lam in (0.5, 2.0, 17.0):
        assert spectral_dimension(s, lam) == pytest.approx(2 * 9 / lam ** 2, rel=1e-15)


def test_heat_trace_direct():
    s = Spectrum([0.5, 1.0, 2.5], [1, 2, 3])
    lam = 1.7
    direct = sum(m * math.exp(-(u / lam) ** 2) for u, m in zip([0.5, 1.0, 2.5], [1, 2, 3]))
    assert heat_trace(s, lam) == pytest.approx(2 * direct, rel=1e-15)
    assert heat_trace(s, lam, symmetrize=False) == pytest.approx(direct, rel=1e-15)
    assert log_heat_trace(s, lam) == pytest.approx(math.log(2 * direct), rel=1e-15)


def test_log_trace_survives_underflow():
    s = Spectrum([100.0, 101.0], [1, 1])
    assert heat_trace(s, 1.0) == 0.0
    assert log_heat_trace(s, 1.0) == pytest.approx(math.log(2) - 1e4 + math.log(1 + math.exp(-201)))
    assert spectral_dimension(s, 1.0) == pytest.approx(2e4, rel=1e-12)


def test_lambda_must_be_positive():
    with pytest.raises(ValueError):
        heat_trace(circle_dirac(10), 0.0)


def test_fd_oracle_50_cases():
    rng = np.random.default_rng(123)
    worst = 0.0
    for _ in range(50):
        n = int(rng.integers(1, 400))
        values = np.sort(rng.uniform(0.05, 200.0, n))
        values = np.unique(values)
        mults = rng.integers(1, 5, values.size)
        spec = Spectrum(values, mults)
        lam = _grid_lam(spec, rng.uniform())
        exact = spectral_dimension(spec, lam)
        fd = fd_spectral_dimension(values, mults, lam)
        worst = max(worst, abs(fd - exact) / abs(exact))
    assert worst < 1e-6


@settings(max_examples=100, deadline=None)
@given(spectra(), st.floats(0.0, 1.0), st.floats(0.01, 100.0))
def test_scale_covariance(spec, frac, c):
    lam = _grid_lam(spec, frac)
    a = spectral_dimension(spec, lam)
    b = spectral_dimension(spec.scaled(c), c * lam)
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


@settings(max_examples=100, deadline=None)
@given(spectra(), st.floats(0.0, 1.0), st.integers(2, 50))
def test_multiplicity_invariance(spec, frac, k):
    lam = _grid_lam(spec, frac)
    a = spectral_dimension(spec, lam)
    b = spectral_dimension(Spectrum(spec.values, spec.multiplicities * k), lam)
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


@settings(max_examples=50, deadline=None)
@given(spectra())
def test_symmetrize_toggle(spec):
    grid = LambdaGrid.default_for(spec, 32)
    a = dimension_curve(spec, grid, True)
    b = dimension_curve(spec, grid, False)
    assert np.array_equal(a.dims, b.dims)
    assert np.allclose(a.traces, 2 * b.traces, rtol=1e-15, atol=0)


@settings(max_examples=50, deadline=None)
@given(spectra())
def test_limits(spec):
    lam = spec.u_min / 50
    assert spectral_dimension(spec, lam) - 2 * spec.u_min ** 2 / lam ** 2 < 1e-6 * spectral_dimension(spec, lam)
    big = np.geomspace(10 * spec.u_max, 1e4 * spec.u_max, 30)
    d = [spectral_dimension(spec, x) for x in big]
    assert all(x > y for x, y in zip(d, d[1:]))
    assert d[-1] < 1e-5


@settings(max_examples=30, deadline=None)
@given(spectra())
def test_curve_right_edge_below_u_min_point(spec):
    curve = dimension_curve(spec)
    assert curve.dims[-1] < spectral_dimension(spec, spec.u_min)


def test_exact_baseline_point():
    assert spectral_dimension(circle_dirac(10_000), 30.0) == pytest.approx(1.0, abs=0.01)


def test_backends_agree_on_curves(monkeypatch):
    spec = torus_dirac(2, 40)
    fast = dimension_curve(spec)
    monkeypatch.setattr(sd, "kernels", _pykernels)
    monkeypatch.setattr(sd, "BACKEND", "python")
    slow = dimension_curve(spec)
    assert fast == slow


# grid

def test_grid():
    g = LambdaGrid.parse("0.1:10:16")
    lams = g.lambdas()
    assert lams.size == 16 and lams[0] == 0.1 and lams[-1] == pytest.approx(10.0)
    assert np.allclose(np.diff(np.log(lams)), math.log(100) / 15)
    assert LambdaGrid.parse(str(g)) == g
    for bad in ("1:0.5:20", "0:1:20", "1:2:15", "1:2", "a:b:c"):
        with pytest.raises(ValueError):
            LambdaGrid.parse(bad)
    spec = circle_dirac(20)
    assert LambdaGrid.default_for(spec) == LambdaGrid(0.05, 195.0, 200)


# plateaus

@pytest.mark.parametrize("spec, level, tol", [(circle_dirac(10_000), 1.0, 0.02),
                                               (torus_dirac(2, 200), 2.0, 0.05),
                                               (sphere_dirac(2000), 2.0, 0.05)])
def test_exact_baselines(spec, level, tol):
    rep = detect_plateau(dimension_curve(spec))
    assert rep.found
    assert rep.mean_dim == pytest.approx(level, abs=tol)
    assert rep.width_efolds >= 1.0
    assert rep.lambda_hi <= spec.u_max / 3


def _synthetic(dims, lo=1.0, hi=None, u_max=1e9):
    dims = np.asarray(dims, dtype=float)
    lams = np.exp(np.arange(dims.size) * 0.25) * lo
    return DimensionCurve(lams, np.ones_like(dims), dims, True, "syn", 1, 0.1, u_max)


def test_short_curve_has_no_plateau():
    curve = dimension_curve(circle_dirac(100), LambdaGrid(10.0, 11.0, 16))
    assert detect_plateau(curve) == PlateauReport.not_found()


def test_widest_run_wins():
    dims = [5, 4, 3, 3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1, 1, 0]
    rep = detect_plateau(_synthetic(dims))
    assert rep.found and rep.mean_dim == 1.0 and rep.width_efolds == pytest.approx(1.5)


def test_tie_breaks():
    # equal widths: the flatter window wins, then the lower one
    noisy = [3, 3.01, 3, 3.01, 3, 10, 20, 1, 1, 1, 1, 1, 30]
    rep = detect_plateau(_synthetic(noisy))
    assert rep.mean_dim == 1.0
    flat = [3, 3, 3, 3, 3, 10, 20, 1, 1, 1, 1, 1, 30]
    rep = detect_plateau(_synthetic(flat))
    assert rep.mean_dim == 3.0 and rep.lambda_lo == 1.0


def test_saturation_excluded():
    dims = [5, 4, 3, 2] + [1] * 10
    curve = _synthetic(dims, u_max=3 * math.exp(0.25 * 6))
    assert not detect_plateau(curve).found
    assert detect_plateau(curve, exclude_saturation=False).found


def test_min_width_and_slope_params():
    # 0.01 per 0.25 e-fold step is a slope of 0.04 per e-fold
    curve = _synthetic([1 + 0.01 * i for i in range(20)])
    assert detect_plateau(curve).found
    assert not detect_plateau(curve, slope_tol=0.03).found
    assert not detect_plateau(curve, min_width_efolds=10.0).found
    steep = _synthetic([1 + 0.02 * i for i in range(20)])
    assert not detect_plateau(steep).found
    assert detect_plateau(steep, slope_tol=0.09).found


def test_std_is_population_std():
    dims = [2, 2.01, 2, 2.01, 2, 2.01, 2, 9]
    rep = detect_plateau(_synthetic(dims))
    assert rep.std_dim == pytest.approx(np.std(dims[:7]))


def test_plateau_growth(zeros_10k):
    reports = plateau_growth(zeros_10k, [100, 1000, 10_000])
    widths = {n: r.width_efolds for n, r in reports}
    assert widths[10_000] >= widths[1000] > 0
    means = [r.mean_dim for n, r in reports if n >= 1000]
    assert max(means) - min(means) <= 0.15
    with pytest.raises(ValueError):
        plateau_growth(zeros_10k, [1000, 100])
    with pytest.raises(ValueError):
        plateau_growth(zeros_10k, [20_000])


def test_riemann_short_prefix_may_lack_plateau(zeros_10k):
    rep = detect_plateau(dimension_curve(scale_zeros(zeros_10k.head(100))))
    assert isinstance(rep.found, bool)


# files

def test_curve_round_trip(tmp_path):
    curve = dimension_curve(torus_dirac(3, 8), symmetrize=False)
    p = tmp_path / "c.csv"
    write_curve(curve, p, comments=["config.a=1"])
    back = read_curve(p)
    assert back == curve
    assert back.metadata["config.a"] == "1"
    text = p.read_text()
    assert "# spectrum=torus:3:8 symmetrize=false n=" in text
    assert "\nlambda,heat_trace,spectral_dimension\n" in text


def test_read_curve_errors(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("a,b,c\n1,2,3\n2,3,4\n")
    with pytest.raises(ValueError):
        read_curve(p)
    p.write_text("lambda,heat_trace,spectral_dimension\n2,1,1\n1,1,1\n")
    with pytest.raises(ValueError):
        read_curve(p)


def test_format_plateau():
    assert format_plateau(PlateauReport.not_found()) == "0.0,0.0,0.0,0.0,0.0,false"
    rep = PlateauReport(1.5, 20.0, 1.0000236599325463, 0.01, 2.5, True)
    assert format_plateau(rep) == "1.5,20.0,1.0000236599325463,0.01,2.5,true"
