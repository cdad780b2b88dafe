"""Kernel backend selection: compiled extension if available, else pure Python.

The choice is made once at import time.  Set ``FVSOLVE_PURE=1`` in the
environment to force the pure-Python kernels (used by the benchmark and the
differential tests).  Callers go through this module's attributes so that
benchmarks can swap backends at runtime.
"""

from __future__ import annotations

import os

from . import _accel_py as pure

try:
    from . import _accel as compiled  # type: ignore[attr-defined]
except ImportError:
    compiled = None

if compiled is not None and not os.environ.get("FVSOLVE_PURE"):
    _active = compiled
    BACKEND = "compiled"
else:
    _active = pure
    BACKEND = "pure"

uf_forest = _active.uf_forest
uf_labels = _active.uf_labels


def backends() -> dict[str, object]:
    """Available kernel modules keyed by name."""
    out = {"pure": pure}
    if compiled is not None:
        out["compiled"] = compiled
    return out
