"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``BKPVC_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
window_cover = _kernels_py.window_cover
min_hitting_superset = _kernels_py.min_hitting_superset

if os.environ.get("BKPVC_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        window_cover = _ckernels.window_cover
        min_hitting_superset = _ckernels.min_hitting_superset
