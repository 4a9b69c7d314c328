"""Core data model: graphs, vertex orderings, interval representations, and
clique paths.

Vertices are 1-based everywhere; per-vertex arrays keep a dead slot 0 so that
the paper-style figures and fixtures transcribe verbatim.  All types are
immutable after construction and safe to share between threads.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from ._jit import njit
from .errors import InputError, ParseError

INT64_GUARD = 2**62


def _frozen(arr):
    arr.setflags(write=False)
    return arr


@njit
def _components_kernel(n, indptr, indices, label, queue):
    count = 0
    for s in range(1, n + 1):
        if label[s] != 0:
            continue
        count += 1
        label[s] = count
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if label[w] == 0:
                    label[w] = count
                    queue[tail] = w
                    tail += 1
    return count


@njit
def _extract_kernel(indptr, indices, members, old2new, sub_indptr, sub_indices):
    k = members.shape[0]
    total = 0
    sub_indptr[0] = 0
    sub_indptr[1] = 0
    for i in range(k):
        v = members[i]
        for p in range(indptr[v], indptr[v + 1]):
            if old2new[indices[p]] != 0:
                total += 1
        sub_indptr[i + 2] = total
    for i in range(k):
        v = members[i]
        out = sub_indptr[i + 1]
        for p in range(indptr[v], indptr[v + 1]):
            w = old2new[indices[p]]
            if w != 0:
                sub_indices[out] = w
                out += 1
    return total


class Graph:
    """Simple undirected graph with sorted adjacency lists (CSR layout).

    ``indptr`` has length n+2 and ``indices`` length 2m; the neighbors of
    vertex v (1..n) are ``indices[indptr[v]:indptr[v+1]]``, sorted ascending.
    """

    __slots__ = ("n", "m", "indptr", "indices")

    def __init__(self, n, indptr, indices):
        self.n = int(n)
        self.m = int(len(indices) // 2)
        self.indptr = _frozen(np.ascontiguousarray(indptr, dtype=np.int64))
        self.indices = _frozen(np.ascontiguousarray(indices, dtype=np.int32))

    def neighbors(self, v):
        """Sorted ascending neighbor ids of v, as a read-only array view."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self):
        """Degree array indexed by vertex id (slot 0 unused)."""
        return np.diff(self.indptr).astype(np.int64)

    def has_edge(self, u, v):
        row = self.neighbors(u)
        k = np.searchsorted(row, v)
        return bool(k < len(row) and row[k] == v)

    def edge_array(self):
        """All edges as an (m, 2) array with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self.n + 1, dtype=np.int32),
                        np.diff(self.indptr[:self.n + 2]).astype(np.int64))
        mask = src < self.indices
        return np.column_stack((src[mask], self.indices[mask]))

    def edges(self):
        for u, v in self.edge_array():
            yield int(u), int(v)

    def vertices(self):
        return range(1, self.n + 1)

    def neighbor_set(self, v):
        return set(int(w) for w in self.neighbors(v))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.m == other.m
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self):
        return hash((self.n, self.m, self.indices.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n, edges):
    """Build a :class:`Graph` from an edge list.

    Parallel edges are silently deduplicated; self-loops and out-of-range ids
    are rejected with an error naming the offending edge.
    """
    n = int(n)
    if n < 0:
        raise InputError(f"negative vertex count {n}")
    pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                       dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise InputError("edges must be pairs of vertex ids")
    u, v = pairs[:, 0], pairs[:, 1]
    bad = (u < 1) | (u > n) | (v < 1) | (v > n)
    if bad.any():
        k = int(np.argmax(bad))
        raise ParseError(f"edge ({pairs[k, 0]}, {pairs[k, 1]}): vertex id out of range 1..{n}")
    loops = u == v
    if loops.any():
        k = int(np.argmax(loops))
        raise ParseError(f"edge ({pairs[k, 0]}, {pairs[k, 1]}): self-loops are not allowed")

    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    packed = np.unique(lo * (n + 1) + hi)
    lo = (packed // (n + 1)).astype(np.int32)
    hi = (packed % (n + 1)).astype(np.int32)

    src = np.concatenate((lo, hi))
    dst = np.concatenate((hi, lo))
    counts = np.bincount(src, minlength=n + 2).astype(np.int64)
    indptr = np.zeros(n + 2, dtype=np.int64)
    np.cumsum(counts[:n + 1], out=indptr[1:])
    order = np.lexsort((dst, src))
    return Graph(n, indptr, dst[order].astype(np.int32))


def components(g):
    """Connected components as arrays of ascending vertex ids, ordered by
    smallest member."""
    if g.n == 0:
        return []
    label = np.zeros(g.n + 1, dtype=np.int32)
    queue = np.empty(g.n + 1, dtype=np.int32)
    _components_kernel(g.n, g.indptr, g.indices, label, queue)
    verts = (np.argsort(label[1:], kind="stable") + 1).astype(np.int32)
    sizes = np.bincount(label[1:])[1:]
    return np.split(verts, np.cumsum(sizes)[:-1])


def induced_subgraph(g, members):
    """Subgraph induced by ``members`` (ascending ids), relabeled 1..k.

    Returns ``(subgraph, members_array)`` where position i of the array is the
    original id of the subgraph's vertex i+1.
    """
    members = np.unique(np.asarray(members, dtype=np.int32))
    if members.size and (members[0] < 1 or members[-1] > g.n):
        raise InputError("subset member outside graph")
    k = members.shape[0]
    old2new = np.zeros(g.n + 1, dtype=np.int32)
    old2new[members] = np.arange(1, k + 1, dtype=np.int32)
    sub_indptr = np.zeros(k + 2, dtype=np.int64)
    deg_total = int(np.sum(g.indptr[members + 1] - g.indptr[members])) if k else 0
    sub_indices = np.empty(deg_total, dtype=np.int32)
    total = _extract_kernel(g.indptr, g.indices, members, old2new, sub_indptr, sub_indices)
    return Graph(k, sub_indptr, sub_indices[:total]), members


class VertexOrdering:
    """Bijection between positions 1..k and vertex ids.

    ``order[i]`` is the vertex at position i; ``pos[v]`` is the position of
    vertex v (0 when v is not covered, as in a sub-ordering).  ``universe`` is
    the id range the ``pos`` array is indexed by.
    """

    __slots__ = ("order", "pos", "universe")

    def __init__(self, order, pos, universe):
        self.order = _frozen(np.ascontiguousarray(order, dtype=np.int32))
        self.pos = _frozen(np.ascontiguousarray(pos, dtype=np.int32))
        self.universe = int(universe)

    @classmethod
    def from_list(cls, ids, universe=None):
        ids = [int(v) for v in ids]
        if universe is None:
            universe = max(ids, default=0)
        order = np.zeros(len(ids) + 1, dtype=np.int32)
        pos = np.zeros(universe + 1, dtype=np.int32)
        for i, v in enumerate(ids, start=1):
            if not 1 <= v <= universe:
                raise InputError(f"vertex {v} outside universe 1..{universe}")
            if pos[v] != 0:
                raise InputError(f"vertex {v} appears twice in ordering")
            order[i] = v
            pos[v] = i
        return cls(order, pos, universe)

    def __len__(self):
        return len(self.order) - 1

    def __iter__(self):
        return (int(v) for v in self.order[1:])

    def to_list(self):
        return [int(v) for v in self.order[1:]]

    def vertex_at(self, i):
        return int(self.order[i])

    def position(self, v):
        return int(self.pos[v])

    @property
    def first(self):
        return int(self.order[1])

    @property
    def last(self):
        return int(self.order[-1])

    def reversed(self):
        order = np.concatenate((self.order[:1], self.order[1:][::-1]))
        pos = np.where(self.pos > 0, len(self) + 1 - self.pos, 0).astype(np.int32)
        return VertexOrdering(order, pos, self.universe)

    def __eq__(self, other):
        if isinstance(other, VertexOrdering):
            return np.array_equal(self.order, other.order)
        if isinstance(other, (list, tuple)):
            return self.to_list() == [int(v) for v in other]
        return NotImplemented

    def __hash__(self):
        return hash(self.order.tobytes())

    def __repr__(self):
        body = ", ".join(str(v) for v in self.to_list())
        return f"<{body}>"


def restrict(sigma, subset):
    """Sub-ordering of ``sigma`` restricted to ``subset``, preserving relative
    order."""
    subset = set(int(v) for v in subset)
    for v in subset:
        if not 1 <= v <= sigma.universe or sigma.pos[v] == 0:
            raise InputError(f"subset member {v} not covered by the ordering")
    ids = [v for v in sigma if v in subset]
    return VertexOrdering.from_list(ids, universe=sigma.universe)


class IntervalRepresentation:
    """One closed interval per vertex with exact rational endpoints.

    Endpoints are stored as int64 numerators over a single shared positive
    denominator, which keeps every comparison exact integer arithmetic.
    """

    __slots__ = ("n", "left_num", "right_num", "den")

    def __init__(self, left_num, right_num, den=1):
        self.left_num = _frozen(np.ascontiguousarray(left_num, dtype=np.int64))
        self.right_num = _frozen(np.ascontiguousarray(right_num, dtype=np.int64))
        self.n = len(self.left_num) - 1
        self.den = int(den)
        if self.den <= 0:
            raise InputError("denominator must be positive")
        if len(self.right_num) != self.n + 1:
            raise InputError("endpoint arrays must have equal length")
        if self.n and np.any(self.left_num[1:] > self.right_num[1:]):
            v = 1 + int(np.argmax(self.left_num[1:] > self.right_num[1:]))
            raise InputError(f"interval of vertex {v} has left > right")

    @classmethod
    def from_fractions(cls, intervals):
        """Build from ``{vertex: (left, right)}`` with Fraction/int endpoints,
        normalizing to a common denominator."""
        n = max(intervals, default=0)
        if set(intervals) != set(range(1, n + 1)):
            raise ParseError("intervals must cover vertices 1..n exactly")
        fracs = {v: (Fraction(l), Fraction(r)) for v, (l, r) in intervals.items()}
        den = 1
        for l, r in fracs.values():
            den = den * l.denominator // gcd(den, l.denominator)
            den = den * r.denominator // gcd(den, r.denominator)
        left = np.zeros(n + 1, dtype=np.int64)
        right = np.zeros(n + 1, dtype=np.int64)
        for v, (l, r) in fracs.items():
            ln, rn = l.numerator * (den // l.denominator), r.numerator * (den // r.denominator)
            if max(abs(ln), abs(rn)) >= INT64_GUARD:
                raise ParseError(f"interval endpoints of vertex {v} too large to normalize")
            left[v], right[v] = ln, rn
        return cls(left, right, den)

    def interval(self, v):
        return (Fraction(int(self.left_num[v]), self.den),
                Fraction(int(self.right_num[v]), self.den))

    def intervals(self):
        return {v: self.interval(v) for v in range(1, self.n + 1)}

    def __eq__(self, other):
        if not isinstance(other, IntervalRepresentation):
            return NotImplemented
        return self.n == other.n and self.intervals() == other.intervals()

    def __repr__(self):
        return f"IntervalRepresentation(n={self.n}, den={self.den})"


class CliquePath:
    """Ordered sequence of maximal cliques with per-vertex first/last indices.

    Cliques live in a CSR layout: clique t (1-based) is
    ``members[indptr[t-1]:indptr[t]]``, sorted ascending by id.
    ``lp[v]``/``rp[v]`` are the 1-based indices of the first and last clique
    containing v.
    """

    __slots__ = ("indptr", "members", "lp", "rp", "n")

    def __init__(self, indptr, members, lp, rp):
        self.indptr = _frozen(np.ascontiguousarray(indptr, dtype=np.int64))
        self.members = _frozen(np.ascontiguousarray(members, dtype=np.int32))
        self.lp = _frozen(np.ascontiguousarray(lp, dtype=np.int32))
        self.rp = _frozen(np.ascontiguousarray(rp, dtype=np.int32))
        self.n = len(self.lp) - 1

    @classmethod
    def from_cliques(cls, n, cliques):
        lp = np.zeros(n + 1, dtype=np.int32)
        rp = np.zeros(n + 1, dtype=np.int32)
        arrays = []
        for t, clique in enumerate(cliques, start=1):
            arr = np.asarray(sorted(set(int(v) for v in clique)), dtype=np.int32)
            if arr.size and (arr[0] < 1 or arr[-1] > n):
                raise InputError(f"clique {t} has a vertex outside 1..{n}")
            arrays.append(arr)
            for v in arr:
                if lp[v] == 0:
                    lp[v] = t
                rp[v] = t
        indptr = np.zeros(len(arrays) + 1, dtype=np.int64)
        np.cumsum([len(a) for a in arrays], out=indptr[1:])
        members = (np.concatenate(arrays) if arrays
                   else np.zeros(0, dtype=np.int32))
        return cls(indptr, members, lp, rp)

    def __len__(self):
        return len(self.indptr) - 1

    def clique(self, t):
        """Members of clique t (1-based), sorted ascending."""
        return self.members[self.indptr[t - 1]:self.indptr[t]]

    def sizes(self):
        return np.diff(self.indptr)

    def as_lists(self):
        return [[int(v) for v in self.clique(t)] for t in range(1, len(self) + 1)]

    def reversed(self):
        ell = len(self)
        sizes = np.diff(self.indptr)
        indptr = np.zeros(ell + 1, dtype=np.int64)
        np.cumsum(sizes[::-1], out=indptr[1:])
        block = np.repeat(np.arange(ell), sizes)
        offset = np.arange(len(self.members)) - self.indptr[block]
        dest = indptr[ell - 1 - block] + offset
        members = np.empty_like(self.members)
        members[dest] = self.members
        lp = np.where(self.rp > 0, ell + 1 - self.rp, 0).astype(np.int32)
        rp = np.where(self.lp > 0, ell + 1 - self.lp, 0).astype(np.int32)
        return CliquePath(indptr, members, lp, rp)

    def __eq__(self, other):
        if not isinstance(other, CliquePath):
            return NotImplemented
        return (np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.members, other.members))

    def __repr__(self):
        return f"CliquePath(l={len(self)}, n={self.n})"


@dataclass(frozen=True)
class OrderingViolation:
    """Witness that an ordering is not an interval ordering: positions
    i < j < k with v_i v_k an edge but v_i v_j not."""

    i: int
    j: int
    k: int
    vertices: tuple = ()
    side: str = "forward"

    def __str__(self):
        verts = f" (vertices {self.vertices})" if self.vertices else ""
        tag = "" if self.side == "forward" else f" [{self.side} side]"
        return f"positions ({self.i}, {self.j}, {self.k}){verts}{tag}"
