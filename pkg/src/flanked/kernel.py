"""Backend selection for the subset construction kernel.

The compiled extension is used when it was built and the automaton fits in
64-bit masks; otherwise the pure-Python kernel runs.  Set
``FLANKED_PURE_PYTHON=1`` to force the fallback everywhere.
"""
from __future__ import annotations

import os

from . import _subset_py

try:
    from . import _subset as _compiled
except ImportError:  # extension not built
    _compiled = None

if os.environ.get("FLANKED_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None

COMPILED_MAX_STATES = 64


def has_compiled() -> bool:
    return _compiled is not None


def backend_for(nstates: int) -> str:
    if _compiled is not None and nstates <= COMPILED_MAX_STATES:
        return "compiled"
    return "python"


def explore(initial, succ, nsym, max_classes, backend: str | None = None):
    """Run subset construction with the chosen (or automatically selected) backend."""
    if backend is None:
        backend = backend_for(len(succ))
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        return _compiled.explore(initial, succ, nsym, max_classes)
    if backend == "python":
        return _subset_py.explore(initial, succ, nsym, max_classes)
    raise ValueError(f"unknown backend {backend!r}")
