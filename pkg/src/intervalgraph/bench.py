"""Wall-time benchmark over doubling sizes, comparing the compiled and
interpreted kernel paths."""

import contextlib
import time

from . import certify, graph, oracle, search, verify
from ._jit import NUMBA_ENABLED, python_impl
from .generate import random_interval
from .recognize import recognize_interval

DEFAULT_SIZES = tuple(2 ** k for k in range(16, 22))
PYTHON_SIZES = tuple(2 ** k for k in range(10, 14))

_KERNEL_MODULES = (graph, search, verify, certify, oracle)


@contextlib.contextmanager
def force_python_kernels():
    """Swap every compiled kernel for its interpreted implementation."""
    saved = []
    for mod in _KERNEL_MODULES:
        for name, obj in list(vars(mod).items()):
            if hasattr(obj, "py_func"):
                saved.append((mod, name, obj))
                setattr(mod, name, python_impl(obj))
    try:
        yield
    finally:
        for mod, name, obj in saved:
            setattr(mod, name, obj)


def _time_once(g):
    t0 = time.perf_counter()
    outcome = recognize_interval(g)
    dt = time.perf_counter() - t0
    if not outcome.verdict:
        raise AssertionError("benchmark generator produced a rejected graph")
    return dt


def warmup():
    """Compile the hot kernels on a small instance before timing."""
    g = random_interval(256, seed=0).graph
    recognize_interval(g)


def run(sizes=DEFAULT_SIZES, seed=20240, repeats=1, mode="jit"):
    """Benchmark recognize_interval on seeded random interval graphs.

    Returns one row per size: n, m, best seconds over ``repeats``, and
    nanoseconds per edge.  ``mode='python'`` times the interpreted kernels.
    """
    rows = []
    if mode == "jit":
        warmup()
    for k, n in enumerate(sizes):
        g = random_interval(int(n), seed=seed + k).graph
        ctx = force_python_kernels() if mode == "python" else contextlib.nullcontext()
        with ctx:
            best = min(_time_once(g) for _ in range(max(1, repeats)))
        rows.append({
            "mode": mode if (NUMBA_ENABLED or mode == "python") else "python",
            "n": g.n,
            "m": g.m,
            "seconds": best,
            "ns_per_edge": best * 1e9 / max(1, g.n + g.m),
        })
    return rows


def doubling_ratios(rows):
    """Wall-time ratios between consecutive rows."""
    return [rows[i]["seconds"] / rows[i - 1]["seconds"]
            for i in range(1, len(rows))]
