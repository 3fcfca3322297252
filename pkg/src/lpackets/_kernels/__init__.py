"""Closure and class-counting kernels with a compiled fast path.

The compiled module is optional; the pure-Python fallback implements the
same contract and is selected automatically when the extension is missing
or when ``LPACKETS_FORCE_FALLBACK`` is set in the environment.
"""

from __future__ import annotations

import os

if os.environ.get("LPACKETS_FORCE_FALLBACK"):
    from . import fallback as _impl
else:
    try:
        from . import _core as _impl          # type: ignore[attr-defined]
    except ImportError:
        from . import fallback as _impl

BACKEND: str = _impl.BACKEND
matrix_closure = _impl.matrix_closure
matrix_class_count = _impl.matrix_class_count

__all__ = ["BACKEND", "matrix_closure", "matrix_class_count"]
