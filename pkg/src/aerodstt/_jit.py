"""JIT compilation switch.

Hot kernels are decorated with :func:`njit`. Setting the environment
variable ``AERODSTT_DISABLE_NUMBA=1`` (before import) swaps in a no-op
decorator so every kernel runs as plain Python/numpy -- slower, but
easier to debug and free of a compiler dependency. Modules that provide
separate numpy fallback implementations check :data:`NUMBA_ENABLED`.
"""

import os

_DISABLE_VALUES = {"1", "true", "yes", "on"}

NUMBA_ENABLED = os.environ.get("AERODSTT_DISABLE_NUMBA", "").strip().lower() not in _DISABLE_VALUES

if NUMBA_ENABLED:
    try:
        from numba import njit
    except ImportError:
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:

    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f

        return wrapper
