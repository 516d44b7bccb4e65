"""Kernel backend selection.

The Cython extension is used when it was built; otherwise the numpy
implementation takes over. Setting ``DCYCLIC_PURE=1`` forces the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("DCYCLIC_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # noqa: F811

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels

rref = _impl.rref
min_weight = _impl.min_weight
span_all = _impl.span_all


def backends():
    """Available implementations keyed by name."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
