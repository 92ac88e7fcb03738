"""Backend selection for the table-driven kernels.

The compiled extension ``pline._ckernels`` is used when it imports; otherwise
(or when ``PLINE_PURE_PYTHON=1``) the numpy implementation in
``pline._pykernels`` is used.  Both expose the same functions.
"""

from __future__ import annotations

import os

from pline import _pykernels as python_backend

try:
    if os.environ.get("PLINE_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from pline import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"


def available_backends() -> dict:
    out = {"python": python_backend}
    if compiled_backend is not None:
        out["cython"] = compiled_backend
    return out
