"""Kernel backend selection: compiled extension if built, else pure Python.

Set PISOT_FORCE_PURE=1 to skip the extension (used by the benchmark and by
tests that compare both backends).
"""

import os

if os.environ.get("PISOT_FORCE_PURE") == "1":
    from . import _purekernels as _impl
else:
    try:
        from . import _corekernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purekernels as _impl

BACKEND = _impl.BACKEND_NAME
lll_kernel = _impl.lll_kernel
svp_kernel = _impl.svp_kernel
