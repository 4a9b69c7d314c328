"""Named fixture graphs and orderings used by tests and the CLI generator.

The graphs here are transcribed data, not computed: ``gstar`` is given by its
22 intervals (clique indices), and its graph is rebuilt by a local pairwise
overlap scan so the fixture does not depend on the sweep machinery it is used
to test.
"""

import numpy as np

from .graph import CliquePath, IntervalRepresentation, VertexOrdering, build_graph

FIG2_EDGES = [(1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8),
              (3, 4), (4, 5), (4, 6), (5, 6), (6, 7)]

# Integer interval representation of the fig2 graph, one point per maximal clique.
FIG2_INTERVALS = {1: (1, 1), 2: (1, 5), 3: (2, 2), 4: (2, 3),
                  5: (3, 3), 6: (3, 4), 7: (4, 4), 8: (5, 5)}

BULL_EDGES = [(1, 2), (2, 3), (3, 4), (2, 5), (3, 5)]

CLAW_EDGES = [(1, 2), (1, 3), (1, 4)]

# First/last clique index of each of the 22 vertices of G*, 16 maximal cliques.
GSTAR_INTERVALS = {
    1: (1, 1), 2: (1, 14), 3: (2, 2), 4: (2, 16), 5: (3, 3), 6: (3, 4),
    7: (4, 5), 8: (4, 14), 9: (5, 12), 10: (6, 6), 11: (6, 7), 12: (7, 11),
    13: (7, 9), 14: (8, 8), 15: (9, 10), 16: (10, 10), 17: (11, 12),
    18: (12, 13), 19: (13, 13), 20: (14, 15), 21: (15, 15), 22: (16, 16),
}

SIGMA_1 = [1, 2, 20, 8, 4, 19, 18, 17, 9, 12, 16, 15, 13, 11, 14, 10, 7, 6, 5, 3, 21, 22]
SIGMA_1_PLUS = [22, 4, 21, 20, 8, 2, 6, 7, 9, 10, 11, 13, 12, 14, 15, 16, 17, 18, 19, 5, 3, 1]
SIGMA_2 = [1, 2, 3, 4, 8, 20, 15, 16, 12, 9, 13, 11, 14, 17, 10, 18, 7, 19, 6, 5, 21, 22]
SIGMA_2_PLUS = [22, 4, 21, 20, 8, 2, 6, 7, 9, 18, 17, 12, 14, 13, 11, 15, 16, 10, 19, 5, 3, 1]
SIGMA_3 = [1, 2, 4, 20, 8, 6, 7, 9, 18, 17, 12, 11, 13, 15, 14, 16, 10, 19, 5, 3, 21, 22]
SIGMA_3_PLUS = [22, 4, 21, 20, 8, 2, 19, 18, 17, 9, 12, 16, 15, 13, 14, 11, 10, 7, 6, 5, 3, 1]
SIGMA_PRIME = [22, 4, 3, 2, 5, 6, 7, 8, 9, 18, 17, 12, 14, 13, 11, 15, 16, 10, 19, 20, 21, 1]

# The vertex set S* of G* whose only splitter is vertex 5.
GSTAR_S_STAR = frozenset({6, 7} | set(range(9, 20)))


def _graph_from_intervals(intervals):
    n = len(intervals)
    edges = []
    for u in range(1, n + 1):
        lu, ru = intervals[u]
        for v in range(u + 1, n + 1):
            lv, rv = intervals[v]
            if lu <= rv and lv <= ru:
                edges.append((u, v))
    return build_graph(n, edges)


def fig2():
    return build_graph(8, FIG2_EDGES)


def fig2_representation():
    n = len(FIG2_INTERVALS)
    left = np.zeros(n + 1, dtype=np.int64)
    right = np.zeros(n + 1, dtype=np.int64)
    for v, (l, r) in FIG2_INTERVALS.items():
        left[v], right[v] = l, r
    return IntervalRepresentation(left, right, 1)


def bull():
    return build_graph(5, BULL_EDGES)


def claw():
    return build_graph(4, CLAW_EDGES)


def gstar():
    return _graph_from_intervals(GSTAR_INTERVALS)


def gstar_representation():
    n = len(GSTAR_INTERVALS)
    left = np.zeros(n + 1, dtype=np.int64)
    right = np.zeros(n + 1, dtype=np.int64)
    for v, (l, r) in GSTAR_INTERVALS.items():
        left[v], right[v] = l, r
    return IntervalRepresentation(left, right, 1)


def gstar_clique_path():
    """The unique clique path of G* (up to reversal), as stab sets of the
    fixture intervals."""
    ell = max(r for _, r in GSTAR_INTERVALS.values())
    cliques = []
    for t in range(1, ell + 1):
        cliques.append([v for v, (l, r) in sorted(GSTAR_INTERVALS.items())
                        if l <= t <= r])
    return CliquePath.from_cliques(len(GSTAR_INTERVALS), cliques)


def gstar_orderings():
    """The published LBFS orderings of G* keyed by name."""
    mk = lambda ids: VertexOrdering.from_list(ids, universe=22)
    return {
        "sigma1": mk(SIGMA_1), "sigma1_plus": mk(SIGMA_1_PLUS),
        "sigma2": mk(SIGMA_2), "sigma2_plus": mk(SIGMA_2_PLUS),
        "sigma3": mk(SIGMA_3), "sigma3_plus": mk(SIGMA_3_PLUS),
        "sigma_prime": mk(SIGMA_PRIME),
    }


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n):
    return build_graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def subdivided_claw():
    """Center 1, mid vertices 2..4, leaves 5..7; not an interval graph."""
    return build_graph(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)])


NAMED = {
    "fig2": fig2,
    "bull": bull,
    "claw": claw,
    "gstar": gstar,
    "p3": lambda: path(3),
    "p4": lambda: path(4),
    "c4": lambda: cycle(4),
    "k1": lambda: complete(1),
    "k3": lambda: complete(3),
    "k4": lambda: complete(4),
    "subdivided-claw": subdivided_claw,
}


def named(name):
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {sorted(NAMED)}") from None
