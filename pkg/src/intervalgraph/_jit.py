"""JIT plumbing: numba when available, plain Python otherwise.

All hot kernels in this package are written as loops over numpy arrays and
decorated with :func:`njit`.  Setting the environment variable
``INTERVALGRAPH_NUMBA=0`` before import disables compilation, in which case
the exact same functions run interpreted (the pure-numpy fallback path).
"""

import os

NUMBA_ENABLED = False


def _identity_njit(*args, **kwargs):
    if args and callable(args[0]):
        return args[0]

    def wrap(func):
        return func

    return wrap


if os.environ.get("INTERVALGRAPH_NUMBA", "1").lower() not in ("0", "false", "no"):
    try:
        from numba import njit as _numba_njit

        def njit(*args, **kwargs):
            kwargs.setdefault("cache", True)
            return _numba_njit(*args, **kwargs)

        NUMBA_ENABLED = True
    except ImportError:
        njit = _identity_njit
else:
    njit = _identity_njit


def python_impl(func):
    """Return the interpreted implementation backing a kernel.

    For a numba dispatcher this is ``func.py_func``; for the fallback path the
    function is already plain Python.  Used by the benchmark to compare the
    compiled and interpreted paths in one process.
    """
    return getattr(func, "py_func", func)
