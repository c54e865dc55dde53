"""Kernel backend selection.

The compiled extension is used when it was built; set ``MAHLERKIT_PURE=1``
to force the pure-Python implementation.
"""

import os

from . import _kernels_py

if os.environ.get("MAHLERKIT_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

rank_mod = _impl.rank_mod

# word-size prime used by the modular rank filter
PRIME = 2147483647

__all__ = ["BACKEND", "PRIME", "rank_mod"]
