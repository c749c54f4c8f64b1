"""Kernel backend selection.

The compiled extension is preferred when present; setting ANGLEKIT_PURE=1 in
the environment (before import) forces the pure-Python fallback. Both
backends implement the same functions with bit-identical float64 results.
"""

from __future__ import annotations

import os

if os.environ.get("ANGLEKIT_PURE", "") not in ("", "0"):
    from . import _kernels_py as kernels

    BACKEND_NAME = "pure-python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND_NAME = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND_NAME = "pure-python"


def kernel_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return BACKEND_NAME
