"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set ``SCROLLCODES_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from scrollcodes import _pykernels

if os.environ.get("SCROLLCODES_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from scrollcodes import _kernels as kernels
        BACKEND = "cython"
    except ImportError:  # extension not built
        kernels = _pykernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
