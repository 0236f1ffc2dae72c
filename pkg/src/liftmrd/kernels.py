"""Backend selection for the GF(q) elimination kernels.

The compiled ``_ckernels`` extension is used when it was built and
``LIFTMRD_PURE_PYTHON`` is unset (or ``0``); otherwise ``_pykernels``.
Both expose: ``rank``, ``rref``, ``min_pair_injection``,
``min_pair_rank_distance``, ``min_nonzero_rank``, ``max_cross_intersection``.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

AVAILABLE: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    AVAILABLE["cython"] = _ckernels


def _default() -> ModuleType:
    if os.environ.get("LIFTMRD_PURE_PYTHON", "0") not in ("", "0") or _ckernels is None:
        return _pykernels
    return _ckernels


backend: ModuleType = _default()
BACKEND_NAME = "cython" if backend is _ckernels else "python"


def get(name: str) -> ModuleType:
    try:
        return AVAILABLE[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available; have {sorted(AVAILABLE)}") from None
