"""Selects the elimination core: compiled extension if built, else pure Python.

Set ``GMATRICES_PURE=1`` in the environment to force the pure-Python core
(used by the benchmark and the parity tests).
"""

import os

from . import _kernel_py

if os.environ.get("GMATRICES_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

IMPLEMENTATION = _impl.IMPLEMENTATION
rref_int = _impl.rref_int
det_int = _impl.det_int
