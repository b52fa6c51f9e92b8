"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``DWLAB_FORCE_PURE=1`` to skip the extension (used by the parity tests
and the kernel benchmark).  ``IMPL`` reports which backend is active.
"""

from __future__ import annotations

import os

from . import _kernels_pure

if os.environ.get("DWLAB_FORCE_PURE") == "1":
    _backend = _kernels_pure
else:
    try:
        from . import _kernels as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = _kernels_pure

IMPL: str = _backend.IMPL
dw_dp = _backend.dw_dp
fas_dp = _backend.fas_dp

pure_dw_dp = _kernels_pure.dw_dp
pure_fas_dp = _kernels_pure.fas_dp
