"""Kernel backend selection.

The compiled Cython core is preferred; the numpy implementation is the
fallback when the extension is unavailable or when SBSIM_PURE is set
(the benchmark uses the latter to compare both).
"""
import os

if os.environ.get("SBSIM_PURE"):
    from . import _pure as backend
else:
    try:
        from . import _core as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as backend

BACKEND = backend.NAME
sbs_objective = backend.sbs_objective
sbs_objective_grad = backend.sbs_objective_grad
sbs_objective_batch = backend.sbs_objective_batch


def get_backend(name):
    """Explicit backend lookup, mainly for tests and the benchmark."""
    if name == "pure":
        from . import _pure

        return _pure
    if name == "cython":
        from . import _core

        return _core
    raise ValueError("unknown backend %r" % name)
