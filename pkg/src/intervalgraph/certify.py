"""Conversions among orderings, interval representations, and clique paths.

These are the yes-certificates: each construction verifies its precondition
and produces an object the verify module accepts.
"""

import numpy as np

from ._jit import njit
from .errors import (InvalidCliquePathError, NotIntervalOrderingError,
                     NotUmbrellaOrderingError)
from .graph import CliquePath, Graph, IntervalRepresentation, build_graph
from .search import _check_permutation, _max_nbr_pos
from .verify import verify_interval_ordering, verify_umbrella_ordering


@njit
def _stab_cliques(n, order, pos, right, point_index, npoints,
                  clique_indptr, clique_members, lp, rp):
    for t in range(npoints + 1):
        clique_indptr[t] = 0
    for v in range(1, n + 1):
        a = point_index[pos[v] - 1] + 1
        b = point_index[right[v]]
        lp[v] = a
        rp[v] = b
        for t in range(a, b + 1):
            clique_indptr[t] += 1
    total = 0
    for t in range(1, npoints + 1):
        size = clique_indptr[t]
        clique_indptr[t - 1] = total
        total += size
    clique_indptr[npoints] = total
    fill = np.empty(npoints + 1, np.int64)
    for t in range(npoints):
        fill[t] = clique_indptr[t]
    for v in range(1, n + 1):
        for t in range(lp[v], rp[v] + 1):
            clique_members[fill[t - 1]] = v
            fill[t - 1] += 1
    return total


@njit
def _pair_count(n, ev_vertex, ev_kind):
    anxt = np.zeros(n + 1, np.int32)
    aprv = np.zeros(n + 1, np.int32)
    ahead = 0
    active = np.int64(0)
    pairs = np.int64(0)
    for e in range(2 * n):
        v = ev_vertex[e]
        if ev_kind[e] == 0:
            pairs += active
            active += 1
            anxt[v] = ahead
            aprv[v] = 0
            if ahead != 0:
                aprv[ahead] = v
            ahead = v
        else:
            active -= 1
            p = aprv[v]
            nx = anxt[v]
            if p != 0:
                anxt[p] = nx
            else:
                ahead = nx
            if nx != 0:
                aprv[nx] = p
    return pairs


@njit
def _pair_fill(n, ev_vertex, ev_kind, out_u, out_v):
    anxt = np.zeros(n + 1, np.int32)
    aprv = np.zeros(n + 1, np.int32)
    ahead = 0
    k = np.int64(0)
    for e in range(2 * n):
        v = ev_vertex[e]
        if ev_kind[e] == 0:
            u = ahead
            while u != 0:
                out_u[k] = u
                out_v[k] = v
                k += 1
                u = anxt[u]
            anxt[v] = ahead
            aprv[v] = 0
            if ahead != 0:
                aprv[ahead] = v
            ahead = v
        else:
            p = aprv[v]
            nx = anxt[v]
            if p != 0:
                anxt[p] = nx
            else:
                ahead = nx
            if nx != 0:
                aprv[nx] = p


def ordering_to_representation(g, sigma):
    """Intervals [i, f(i)] where f(i) is the position of v_i's last neighbor
    (clamped below by i); integer endpoints in 1..n."""
    sigma = _check_permutation(g, sigma)
    violation = verify_interval_ordering(g, sigma)
    if violation is not None:
        raise NotIntervalOrderingError(violation)
    left = sigma.pos.astype(np.int64)
    right = _max_nbr_pos(g.n, g.indptr, g.indices, sigma.pos, True).astype(np.int64)
    return IntervalRepresentation(left, right, 1)


def ordering_to_clique_path(g, sigma):
    """Clique path of an interval ordering: the stab sets of the derived
    representation at points where some interval ends, kept in order."""
    sigma = _check_permutation(g, sigma)
    violation = verify_interval_ordering(g, sigma)
    if violation is not None:
        raise NotIntervalOrderingError(violation)
    if g.n == 0:
        return CliquePath.from_cliques(0, [])
    reach = _max_nbr_pos(g.n, g.indptr, g.indices, sigma.pos, True)
    right = np.zeros(g.n + 1, dtype=np.int64)
    right[1:] = reach[1:]

    ends = np.bincount(right[1:], minlength=g.n + 1)
    is_point = ends > 0
    point_index = np.cumsum(is_point)          # points <= i, indexed 0..n
    npoints = int(point_index[-1])
    clique_indptr = np.zeros(npoints + 1, dtype=np.int64)
    lp = np.zeros(g.n + 1, dtype=np.int32)
    rp = np.zeros(g.n + 1, dtype=np.int32)
    total_hint = int(np.sum(point_index[right[1:]] - point_index[sigma.pos[1:] - 1]))
    members = np.empty(total_hint, dtype=np.int32)
    _stab_cliques(g.n, sigma.order, sigma.pos, right, point_index, npoints,
                  clique_indptr, members, lp, rp)
    return CliquePath(clique_indptr, members, lp, rp)


def clique_path_to_representation(cp):
    """Intervals [lp(v), rp(v)] with integer endpoints in 1..l.

    The clique path is assumed valid for its graph (see verify_clique_path);
    only structural sanity is checkable without the graph.
    """
    if cp.n > 0:
        bad = np.nonzero(cp.lp[1:] == 0)[0]
        if bad.size:
            raise InvalidCliquePathError(f"vertex {int(bad[0]) + 1} is in no clique")
    return IntervalRepresentation(cp.lp.astype(np.int64), cp.rp.astype(np.int64), 1)


def umbrella_to_unit_representation(g, sigma):
    """Proper interval representation from an umbrella ordering:
    I(v) = [p(v), p(u) + p(v)/n] with u the last vertex of sigma restricted
    to the closed neighborhood of v.  Denominator exactly n."""
    sigma = _check_permutation(g, sigma)
    violation = verify_umbrella_ordering(g, sigma)
    if violation is not None:
        raise NotUmbrellaOrderingError(violation)
    if g.n == 0:
        return IntervalRepresentation(np.zeros(1, np.int64), np.zeros(1, np.int64), 1)
    n = g.n
    reach = _max_nbr_pos(g.n, g.indptr, g.indices, sigma.pos, True).astype(np.int64)
    p = sigma.pos.astype(np.int64)
    return IntervalRepresentation(p * n, reach * n + p, n)


def representation_to_graph(rep):
    """Intersection graph of the intervals, by endpoint sweep."""
    from .verify import _sorted_events

    if rep.n == 0:
        return build_graph(0, [])
    ev_vertex, ev_kind = _sorted_events(rep)
    count = _pair_count(rep.n, ev_vertex, ev_kind)
    out_u = np.empty(count, dtype=np.int64)
    out_v = np.empty(count, dtype=np.int64)
    _pair_fill(rep.n, ev_vertex, ev_kind, out_u, out_v)
    return build_graph(rep.n, np.column_stack((out_u, out_v)))
