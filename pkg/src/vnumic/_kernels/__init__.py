"""Kernel backend selection.

The compiled extension (``_ccore``, built from Cython) and the pure-Python
module (``pure``) implement the same three kernels.  The compiled one is
preferred when importable; set ``VNUMIC_KERNELS=pure`` or ``=compiled`` to
force a backend.  The compiled scan kernels guard against exponents that
would overflow their C integer loops and raise ``KernelOverflow``; the
wrappers fall back to the pure twin in that case, so arbitrary-precision
inputs remain supported everywhere.
"""

from __future__ import annotations

import os

from . import pure as _pure
from .errors import KernelOverflow

__all__ = ["BACKEND", "KernelOverflow", "npmember", "witness_scan", "socle_corners"]

_mode = os.environ.get("VNUMIC_KERNELS", "auto")
_compiled = None
if _mode in ("auto", "compiled"):
    try:
        from . import _ccore as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None
        if _mode == "compiled":
            raise ImportError(
                "VNUMIC_KERNELS=compiled but the vnumic._kernels._ccore "
                "extension is not built"
            )
elif _mode != "pure":
    raise ValueError(f"VNUMIC_KERNELS must be auto, pure or compiled, not {_mode!r}")

BACKEND = _compiled.BACKEND if _compiled is not None else _pure.BACKEND


def npmember(rows, point) -> bool:
    if _compiled is not None:
        return _compiled.npmember(rows, point)
    return _pure.npmember(rows, point)


def witness_scan(gens, bounds, prime):
    if _compiled is not None:
        try:
            return _compiled.witness_scan(gens, bounds, prime)
        except KernelOverflow:
            pass
    return _pure.witness_scan(gens, bounds, prime)


def socle_corners(gens, bounds):
    if _compiled is not None:
        try:
            return _compiled.socle_corners(gens, bounds)
        except KernelOverflow:
            pass
    return _pure.socle_corners(gens, bounds)
