"""Kernel backend selection.

The simulation kernels exist twice: compiled (``_ckernels``, a C extension
built from the same source) and interpreted (``_kernels``).  The compiled
one is preferred; set ``PLAYLAB_ENGINE=python`` to force the interpreted
fallback, e.g. for the benchmark or debugging.
"""

from __future__ import annotations

import os

from . import _kernels as _py_kernels

try:
    from . import _ckernels as _c_kernels  # type: ignore[attr-defined]
except ImportError:
    _c_kernels = None

if os.environ.get("PLAYLAB_ENGINE", "").lower() in ("python", "py"):
    kernels = _py_kernels
    BACKEND = "python"
elif _c_kernels is not None:
    kernels = _c_kernels
    BACKEND = "compiled"
else:
    kernels = _py_kernels
    BACKEND = "python"


def available_backends() -> dict[str, object]:
    out = {"python": _py_kernels}
    if _c_kernels is not None:
        out["compiled"] = _c_kernels
    return out
