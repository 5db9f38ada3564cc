"""Numba switch for the search kernels.

Set ``MBDOM_DISABLE_JIT=1`` before import to run the kernels as plain
Python (the memo becomes a dict and masks stay Python ints). The value is
read once, at import time.
"""

import os

import numpy as np

_FLAG = os.environ.get("MBDOM_DISABLE_JIT", "").strip().lower()
_WANT_JIT = _FLAG in ("", "0", "false", "no")

try:
    if not _WANT_JIT:
        raise ImportError("jit disabled by MBDOM_DISABLE_JIT")
    from numba import njit, types
    from numba.typed import Dict

    USE_NUMBA = True
except ImportError:
    USE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator


_SIGN = 1 << 63
_WRAP = 1 << 64


def to_word(mask):
    """Map a non-negative mask to the representation the kernels expect."""
    if USE_NUMBA and mask >= _SIGN:
        return mask - _WRAP
    return mask


def new_memo():
    if USE_NUMBA:
        return Dict.empty(key_type=types.UniTuple(types.int64, 3), value_type=types.int64)
    return {}


def neighborhoods(closed):
    """Closed neighbourhood table in kernel form."""
    if USE_NUMBA:
        return np.array([to_word(m) for m in closed], dtype=np.int64)
    return list(closed)
