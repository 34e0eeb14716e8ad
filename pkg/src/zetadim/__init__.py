"""Spectral dimension of the Riemann zeta zeros.

Zeros come from the Riemann-Siegel formula (or imported tables), are scaled
to unit mean spacing, and treated as the spectrum of a Dirac-type operator
whose heat-kernel trace yields a scale-dependent spectral dimension.
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .zeros import (ZeroSource, ZeroTable, CountingReport, MissedZeroError,
                    ZeroFileError, rs_theta, rs_z, reference_zeta_half_line,
                    find_zeros, count_estimate, import_zero_file, write_zero_file,
                    cached_zeros)
from .spectra import (Spectrum, EnsembleConfig, scale_zeros, unfold_zeros_theta,
                      circle_dirac, torus_dirac, sphere_dirac, poisson_spectrum,
                      gue_spectrum, tridiagonal_eigenvalues, read_spectrum,
                      write_spectrum)
from .specdim import (LambdaGrid, DimensionCurve, PlateauReport, heat_trace,
                      spectral_dimension, dimension_curve, detect_plateau,
                      plateau_growth, read_curve, write_curve)
from .svg import render_svg

__all__ = [
    "BACKEND", "ZeroSource", "ZeroTable", "CountingReport", "MissedZeroError",
    "ZeroFileError", "rs_theta", "rs_z", "reference_zeta_half_line", "find_zeros",
    "count_estimate", "import_zero_file", "write_zero_file", "cached_zeros",
    "Spectrum", "EnsembleConfig", "scale_zeros", "unfold_zeros_theta", "circle_dirac",
    "torus_dirac", "sphere_dirac", "poisson_spectrum", "gue_spectrum",
    "tridiagonal_eigenvalues", "read_spectrum", "write_spectrum", "LambdaGrid",
    "DimensionCurve", "PlateauReport", "heat_trace", "spectral_dimension",
    "dimension_curve", "detect_plateau", "plateau_growth", "read_curve", "write_curve",
    "render_svg",
]
