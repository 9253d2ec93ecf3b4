"""Backend selection for the integer inner loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_kernels_py`` module is used. Setting the environment
variable ``PIOFORMULA_PURE=1`` forces the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("PIOFORMULA_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

iterate = _impl.iterate
terms = _impl.terms
matmul = _impl.matmul
matvec = _impl.matvec
poly_mul = _impl.poly_mul
horner = _impl.horner
bareiss_det = _impl.bareiss_det


def available_backends():
    """Map backend name to kernel module for every backend importable here."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
