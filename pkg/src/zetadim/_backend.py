"""Pick the compiled kernels when available, else the pure-Python twins.

Set ``ZETADIM_BACKEND=python`` to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("ZETADIM_BACKEND", "").lower() == "python":
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"
