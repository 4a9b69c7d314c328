"""Seeded graph generators; random interval and unit interval generators
carry their witness representation as ground truth."""

from dataclasses import dataclass

import numpy as np

from .certify import representation_to_graph
from .errors import InputError
from .fixtures import named
from .graph import Graph, IntervalRepresentation, build_graph


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    representation: object = None   # ground truth for interval kinds
    kind: str = ""
    params: dict = None


def random_interval(n, seed, span=None, max_len=63):
    """n random integer intervals; defaults give average degree about 16
    (m/n about 8) independent of n."""
    if n < 0:
        raise InputError("n must be non-negative")
    rng = np.random.default_rng(seed)
    span = span if span is not None else max(4 * n, 1)
    left = np.zeros(n + 1, dtype=np.int64)
    right = np.zeros(n + 1, dtype=np.int64)
    left[1:] = rng.integers(1, span + 1, size=n)
    right[1:] = left[1:] + rng.integers(0, max_len + 1, size=n)
    rep = IntervalRepresentation(left, right, 1)
    return GeneratedGraph(representation_to_graph(rep), rep, "random-interval",
                          {"n": n, "seed": seed, "span": span, "max_len": max_len})


def random_unit(n, seed, span=None):
    """n unit-length intervals with random rational left endpoints
    (denominator n); always a unit interval graph."""
    if n < 0:
        raise InputError("n must be non-negative")
    rng = np.random.default_rng(seed)
    span = span if span is not None else max(n // 8, 1)
    den = max(n, 1)
    left = np.zeros(n + 1, dtype=np.int64)
    left[1:] = rng.integers(0, span * den + 1, size=n)
    right = left + den
    right[0] = 0
    rep = IntervalRepresentation(left, right, den)
    return GeneratedGraph(representation_to_graph(rep), rep, "random-unit",
                          {"n": n, "seed": seed, "span": span})


def gnp(n, p, seed):
    """Erdos-Renyi G(n, p)."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InputError("need n >= 0 and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    us, vs = np.triu_indices(n, k=1)
    mask = rng.random(len(us)) < p
    edges = np.column_stack((us[mask] + 1, vs[mask] + 1))
    return GeneratedGraph(build_graph(n, edges), None, "gnp",
                          {"n": n, "p": p, "seed": seed})


def generate(kind, **params):
    """Dispatch by kind: random-interval | random-unit | gnp | named."""
    if kind == "random-interval":
        return random_interval(params["n"], params["seed"],
                               params.get("span"), params.get("max_len", 63))
    if kind == "random-unit":
        return random_unit(params["n"], params["seed"], params.get("span"))
    if kind == "gnp":
        return gnp(params["n"], params["p"], params["seed"])
    if kind == "named":
        return GeneratedGraph(named(params["name"]), None, "named",
                              {"name": params["name"]})
    raise InputError(f"unknown generator kind {kind!r}")
