"""Optional numba acceleration.

The hot kernels in kernels.py are plain numpy-on-uint64 functions. When numba
is installed and the environment variable VSTAB_NUMBA is not set to one of
0/off/false/no, they are compiled with @njit; otherwise the same source runs
interpreted. Both paths execute identical statements, so results (including
witnesses) are bit-identical.
"""

import os

try:
    from numba import njit as _njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

_flag = os.environ.get("VSTAB_NUMBA", "auto").strip().lower()
JIT_ENABLED = HAVE_NUMBA and _flag not in ("0", "off", "false", "no")


def maybe_njit(func):
    """Compile func with numba when the jit path is enabled, else return it unchanged."""
    if JIT_ENABLED:
        return _njit(cache=True)(func)
    return func


def plain(func):
    """The interpreted twin of a maybe_njit function (for benchmarks)."""
    return getattr(func, "py_func", func)
