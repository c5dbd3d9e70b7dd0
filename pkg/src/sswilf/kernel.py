"""Backend selection for the sweep kernels.

The compiled extension is preferred when importable; otherwise the pure
Python twin takes over with identical semantics.  Set ``SSWILF_KERNEL=python``
to force the fallback (useful for benchmarking and cross-checking).
"""
from __future__ import annotations

import os

from ._pykernel import MAX_N, pack_code, unpack_code, unrank

if os.environ.get("SSWILF_KERNEL", "").lower() in {"python", "py", "pure"}:
    from . import _pykernel as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernel as _impl

        BACKEND = "python"

pyramid_key = _impl.pyramid_key
sweep_block = _impl.sweep_block

__all__ = [
    "BACKEND",
    "MAX_N",
    "pack_code",
    "pyramid_key",
    "sweep_block",
    "unpack_code",
    "unrank",
]
