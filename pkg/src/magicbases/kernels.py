"""Backend selection for the hot kernels.

The compiled extension is used when importable; set ``MAGICBASES_PURE=1`` to
force the pure-Python fallback. ``BACKEND`` names the active choice.
"""

import os

from . import _kernels_py

if os.environ.get("MAGICBASES_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

extremal_search = _impl.extremal_search
magic_scan = _impl.magic_scan
triple_counts = _impl.triple_counts

__all__ = ["BACKEND", "extremal_search", "magic_scan", "triple_counts"]
