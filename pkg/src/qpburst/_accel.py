"""Backend selection for the hot numeric kernels.

Kernels are written as plain Python functions over scalars and numpy arrays
and compiled with numba when available.  Set ``QPBURST_NUMBA=0`` to force the
pure-Python/numpy fallback path (same code, not compiled; a few kernels have
dedicated vectorized numpy implementations instead).
"""

import os

__all__ = ["NUMBA_ENABLED", "jit_maybe"]


def _env_wants_numba() -> bool:
    val = os.environ.get("QPBURST_NUMBA", "1").strip().lower()
    return val not in ("0", "false", "off", "no")


try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    _HAVE_NUMBA = False

NUMBA_ENABLED = _HAVE_NUMBA and _env_wants_numba()


def jit_maybe(**options):
    """Return ``numba.njit`` with the given options, or a no-op decorator."""
    if NUMBA_ENABLED:
        return numba.njit(**options)

    def passthrough(func):
        return func

    return passthrough
