"""Compare the compiled kernels with their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--quick] [--repeat 3]

Each workload is run on both backends, the outputs are checked to be
bit-identical, and the best wall time of ``--repeat`` runs is reported.
"""
import argparse
import sys
import time

import numpy as np

from zetadim import _pykernels
from zetadim.spectra import EnsembleConfig, gue_tridiagonal
from zetadim.zeros import gram_point

try:
    from zetadim import _ckernels
except ImportError:
    _ckernels = None


def _brackets(n):
    out = []
    for k in range(n):
        a, b = gram_point(k), gram_point(k + 1)
        za = _pykernels.rs_z(a, 8)
        if (za < 0) != (_pykernels.rs_z(b, 8) < 0):
            out.append((a, b, za))
    return out


def workloads(quick):
    n_brackets = 20 if quick else 300
    n_values = 1000 if quick else 10_000
    n_points = 20 if quick else 200
    n_matrix = 100 if quick else 1000

    brackets = _brackets(n_brackets)
    u = np.cumsum(np.random.default_rng(0).exponential(size=n_values))
    m = np.ones(n_values)
    lams = np.geomspace(u[0] / 10, u[-1] * 10, n_points)
    diag, off = gue_tridiagonal(EnsembleConfig(n_matrix, 1))
    diag, off = diag.tolist(), off.tolist()

    def bisection(k):
        return [k.bisect_rs_z(a, b, za, 8, 1e-9) for a, b, za in brackets]

    def heat_grid(k):
        if k is _pykernels:
            return k.gauss_sums_grid(u.tolist(), m.tolist(), lams.tolist())
        return k.gauss_sums_grid(u, m, lams)

    def ql(k):
        return k.tql_eigenvalues(diag, off, 50)

    return [(f"RS bisection, {len(brackets)} zeros", bisection),
            (f"heat-trace grid, {n_values} values x {n_points} cutoffs", heat_grid),
            (f"implicit QL, {n_matrix}x{n_matrix} tridiagonal", ql)]


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="small sizes, for smoke tests")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':52s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, work in workloads(args.quick):
        tp, rp = best_time(lambda: work(_pykernels), args.repeat)
        tc, rc = best_time(lambda: work(_ckernels), args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        print(f"{name:52s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
