"""Backend selection for the Bruhat-order kernels.

The compiled extension is used when it was built; setting ``TROPFLAG_PURE=1``
forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TROPFLAG_PURE", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

bruhat_leq = _impl.bruhat_leq
leq_matrix = _impl.leq_matrix

__all__ = ["BACKEND", "bruhat_leq", "leq_matrix"]
