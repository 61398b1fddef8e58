"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set CYCLEDUALITY_PURE=1 to force the pure lane.  Both lanes implement
identical algorithms with identical tie-breaks, so switching lanes never
changes any result, only speed.  ``ACTIVE_IMPL`` names the lane in use.
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

compiled = None
if os.environ.get("CYCLEDUALITY_PURE", "") != "1":
    try:
        from . import _kernels as compiled  # type: ignore[attr-defined]
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else pure

ACTIVE_IMPL: str = _impl.IMPL

gf2_eliminate = _impl.gf2_eliminate
gf2_solve_bits = _impl.gf2_solve_bits
det_bareiss = _impl.det_bareiss
max_weight_disjoint = _impl.max_weight_disjoint
min_hitting_mask = _impl.min_hitting_mask

__all__ = [
    "ACTIVE_IMPL",
    "pure",
    "compiled",
    "gf2_eliminate",
    "gf2_solve_bits",
    "det_bareiss",
    "max_weight_disjoint",
    "min_hitting_mask",
]
