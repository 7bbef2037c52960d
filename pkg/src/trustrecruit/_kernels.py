"""Route-kernel backend selection.

The compiled extension is used when it was built; otherwise, or when
``TRUSTRECRUIT_PURE_PYTHON=1`` is set, the pure-Python kernels are used.
"""

import os

from . import _pykernels

try:
    if os.environ.get("TRUSTRECRUIT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-python kernels forced")
    from . import _ckernels as _backend
    BACKEND = "cython"
except ImportError:
    _backend = _pykernels
    BACKEND = "python"

hop_ball = _backend.hop_ball
best_routes = _backend.best_routes

BACKENDS = {"python": _pykernels}
if BACKEND == "cython":
    BACKENDS["cython"] = _backend
