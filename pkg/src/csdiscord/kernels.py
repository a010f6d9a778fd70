"""Kernel selection: the compiled extension when importable, else numpy.

Set ``CSDISCORD_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("CSDISCORD_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

jacobi_eigh4 = _impl.jacobi_eigh4
cond_entropy_dirs = _impl.cond_entropy_dirs

__all__ = ["BACKEND", "jacobi_eigh4", "cond_entropy_dirs"]
