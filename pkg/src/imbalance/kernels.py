"""Kernel selection: the compiled extension when built, else pure Python.

Set ``IMBALANCE_PURE=1`` to force the fallback.
"""

import os

from imbalance._kernels_py import CapExceeded
from imbalance import _kernels_py

if os.environ.get("IMBALANCE_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from imbalance import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"
MAX_COMPILED_N = 63


def extension_stats(n, pred_masks, labels, cap):
    if _impl is not _kernels_py and n > MAX_COMPILED_N:
        return _kernels_py.extension_stats(n, pred_masks, labels, cap)
    return _impl.extension_stats(n, pred_masks, labels, cap)


__all__ = ["BACKEND", "CapExceeded", "extension_stats"]
