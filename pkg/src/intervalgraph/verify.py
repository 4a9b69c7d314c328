"""Linear-time verifiers: the trust anchor for every recognizer output.

All verifiers are pure functions returning ``None`` on success and a defect
object with a concrete witness otherwise.
"""

from dataclasses import dataclass

import numpy as np

from ._jit import njit
from .errors import InputError
from .graph import Graph, OrderingViolation, VertexOrdering
from .search import _check_permutation, lbfs


@dataclass(frozen=True)
class RepresentationDefect:
    kind: str           # non-edge-overlap | missing-edge | containment | shape
    pair: tuple
    message: str

    def __str__(self):
        return self.message


@dataclass(frozen=True)
class CliquePathDefect:
    check: str          # structure | consecutiveness | cliqueness | maximality | coverage | count
    message: str
    witness: tuple = ()

    def __str__(self):
        return f"{self.check}: {self.message}"


# ---------------------------------------------------------------------------
# interval orderings
# ---------------------------------------------------------------------------

@njit
def _interval_ordering_check(n, indptr, indices, order, pos):
    """Bucket adjacency into descending renumbered lists and check that each
    list's later-neighbor prefix is the contiguous run f(i)..i+1.

    Returns the lexicographically first violating triple of positions, or
    (0, 0, 0) when the ordering is an interval ordering.
    """
    total = indptr[n + 1]
    desc = np.empty(total, np.int32)
    fill = np.empty(n + 1, np.int64)
    for v in range(1, n + 1):
        fill[v] = indptr[v + 1]
    for i in range(1, n + 1):
        v = order[i]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            fill[w] -= 1
            desc[fill[w]] = i
    for i in range(1, n + 1):
        v = order[i]
        lo = indptr[v]
        hi = indptr[v + 1]
        t = 0
        for k in range(lo, hi):
            if desc[k] > i:
                t += 1
            else:
                break
        expected = i + 1
        for k in range(lo + t - 1, lo - 1, -1):
            val = desc[k]
            if val != expected:
                return i, expected, val
            expected += 1
    return 0, 0, 0


def verify_interval_ordering(g, sigma):
    """Check the interval-ordering condition: for i < j < k, an edge
    v_i v_k forces the edge v_i v_j.

    Returns ``None`` when sigma is an interval ordering, otherwise the
    lexicographically first :class:`OrderingViolation`.
    """
    sigma = _check_permutation(g, sigma)
    i, j, k = _interval_ordering_check(g.n, g.indptr, g.indices, sigma.order, sigma.pos)
    if i == 0:
        return None
    verts = (sigma.vertex_at(i), sigma.vertex_at(j), sigma.vertex_at(k))
    return OrderingViolation(int(i), int(j), int(k), verts)


def verify_umbrella_ordering(g, sigma):
    """Check the umbrella condition by testing sigma and its reversal as
    interval orderings.

    A violation on the reversal carries positions in the reversed ordering
    and ``side='reversed'``.
    """
    sigma = _check_permutation(g, sigma)
    v = verify_interval_ordering(g, sigma)
    if v is not None:
        return v
    rev = sigma.reversed()
    v = verify_interval_ordering(g, rev)
    if v is not None:
        return OrderingViolation(v.i, v.j, v.k, v.vertices, side="reversed")
    return None


# ---------------------------------------------------------------------------
# interval representations
# ---------------------------------------------------------------------------

@njit
def _rep_sweep(n, indptr, indices, ev_vertex, ev_kind, realized_deg):
    """Sweep endpoint events; every co-active pair must be an edge.

    Returns (status, u, v): status 0 = all active pairs are edges, 1 = the
    pair (u, v) overlaps but is not an edge.
    """
    anxt = np.zeros(n + 1, np.int32)
    aprv = np.zeros(n + 1, np.int32)
    ahead = 0
    pairs = np.int64(0)
    for e in range(2 * n):
        v = ev_vertex[e]
        if ev_kind[e] == 0:
            u = ahead
            while u != 0:
                lo = indptr[v]
                hi = indptr[v + 1]
                found = False
                while lo < hi:
                    mid = (lo + hi) // 2
                    if indices[mid] == u:
                        found = True
                        break
                    elif indices[mid] < u:
                        lo = mid + 1
                    else:
                        hi = mid
                if not found:
                    return 1, u, v
                pairs += 1
                realized_deg[u] += 1
                realized_deg[v] += 1
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
    return 0, 0, 0


@njit
def _containment_check(order_idx, left, right):
    """Proper containment scan over intervals sorted by (l asc, r desc, id).

    Returns (flag, container, contained)."""
    best_r = np.int64(-(2**62))
    best_l = np.int64(0)
    best_id = 0
    for idx in range(order_idx.shape[0]):
        v = order_idx[idx]
        l = left[v]
        r = right[v]
        if best_id != 0:
            if best_r > r or (best_r == r and best_l < l):
                return 1, best_id, v
        if r > best_r or best_id == 0:
            best_r = r
            best_l = l
            best_id = v
        elif r == best_r and l < best_l:
            best_l = l
            best_id = v
    return 0, 0, 0


def _sorted_events(rep):
    n = rep.n
    coords = np.concatenate((rep.left_num[1:], rep.right_num[1:]))
    kinds = np.concatenate((np.zeros(n, np.int8), np.ones(n, np.int8)))
    verts = np.concatenate((np.arange(1, n + 1, dtype=np.int32),
                            np.arange(1, n + 1, dtype=np.int32)))
    order = np.lexsort((verts, kinds, coords))
    return verts[order], kinds[order]


def verify_representation(g, rep, unit_mode=False):
    """Check that the interval intersection pattern equals E(G) exactly, by
    an endpoint sweep; in unit mode additionally reject proper containment.

    Returns ``None`` or a :class:`RepresentationDefect` naming the pair.
    """
    if rep.n != g.n:
        return RepresentationDefect("shape", (),
                                    f"representation covers {rep.n} vertices, graph has {g.n}")
    if g.n == 0:
        return None
    ev_vertex, ev_kind = _sorted_events(rep)
    realized = np.zeros(g.n + 1, dtype=np.int64)
    status, u, v = _rep_sweep(g.n, g.indptr, g.indices, ev_vertex, ev_kind, realized)
    if status == 1:
        return RepresentationDefect(
            "non-edge-overlap", (int(u), int(v)),
            f"intervals of non-adjacent vertices {int(u)} and {int(v)} intersect")
    deg = g.degrees()
    short = np.nonzero(realized[1:] < deg[1:])[0]
    if short.size:
        u = int(short[0]) + 1
        witness = None
        for w in g.neighbors(u):
            w = int(w)
            if (rep.left_num[u] > rep.right_num[w]
                    or rep.left_num[w] > rep.right_num[u]):
                witness = w
                break
        if witness is None:
            raise AssertionError("sweep accounting out of sync with adjacency")
        return RepresentationDefect(
            "missing-edge", (u, witness),
            f"edge ({u}, {witness}) is not realized: intervals are disjoint")
    if unit_mode:
        idx = np.arange(1, g.n + 1)
        order = idx[np.lexsort((idx, -rep.right_num[1:], rep.left_num[1:]))]
        flag, a, b = _containment_check(order.astype(np.int32),
                                        rep.left_num, rep.right_num)
        if flag:
            return RepresentationDefect(
                "containment", (int(a), int(b)),
                f"interval of vertex {int(b)} is properly contained in vertex {int(a)}'s")
    return None


# ---------------------------------------------------------------------------
# chordal clique counting (used as the independent cross-check below)
# ---------------------------------------------------------------------------

@njit
def _chordal_count_kernel(n, indptr, indices, pos, order):
    """Perfect-elimination validity check plus maximal clique count.

    Treats the reversal of an LBFS ordering as the tentative elimination
    order; X(v) is the set of earlier neighbors of v and parent(v) the latest
    of them.  Returns (chordal, count); count is meaningful only if chordal.
    """
    xsize = np.zeros(n + 1, np.int64)
    parent = np.zeros(n + 1, np.int32)
    for v in range(1, n + 1):
        best = 0
        cnt = 0
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if pos[w] < pos[v]:
                cnt += 1
                if best == 0 or pos[w] > pos[best]:
                    best = w
        xsize[v] = cnt
        parent[v] = best

    mark = np.zeros(n + 1, np.uint8)
    dominated = np.zeros(n + 1, np.uint8)
    # children grouped by parent via counting sort over parent ids
    cnts = np.zeros(n + 2, np.int64)
    for v in range(1, n + 1):
        if parent[v] != 0:
            cnts[parent[v] + 1] += 1
    for p in range(1, n + 1):
        cnts[p + 1] += cnts[p]
    children = np.empty(n, np.int32)
    fill = cnts.copy()
    for v in range(1, n + 1):
        if parent[v] != 0:
            children[fill[parent[v]]] = v
            fill[parent[v]] += 1

    for p in range(1, n + 1):
        lo = cnts[p]
        hi = cnts[p + 1]
        if lo == hi:
            continue
        for k in range(indptr[p], indptr[p + 1]):
            mark[indices[k]] = 1
        for c in range(lo, hi):
            v = children[c]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if pos[w] < pos[v] and w != p and mark[w] == 0:
                    return False, np.int64(0)
            if xsize[v] == xsize[p] + 1:
                dominated[p] = 1
        for k in range(indptr[p], indptr[p + 1]):
            mark[indices[k]] = 0

    count = np.int64(0)
    for v in range(1, n + 1):
        if dominated[v] == 0:
            count += 1
    return True, count


def chordal_clique_count(g):
    """Number of maximal cliques, or ``None`` when the graph is not chordal.

    Independent of the clique-path construction: runs one LBFS and counts
    non-dominated candidate cliques along the perfect elimination order.
    """
    if g.n == 0:
        return 0
    sigma, _ = lbfs(g)
    ok, count = _chordal_count_kernel(g.n, g.indptr, g.indices, sigma.pos, sigma.order)
    return int(count) if ok else None


# ---------------------------------------------------------------------------
# clique paths
# ---------------------------------------------------------------------------

def verify_clique_path(g, cp):
    """Validate a clique path against its graph.

    Checks, in order: structure, per-vertex consecutiveness (each clique must
    equal the stab set of the lp/rp intervals), cliqueness and edge coverage
    (the lp/rp intervals must realize exactly E(G)), maximality of every
    clique, and the total count against an independent perfect-elimination
    clique count.
    """
    from .graph import IntervalRepresentation

    ell = len(cp)
    if cp.n != g.n:
        return CliquePathDefect("structure", f"clique path covers {cp.n} vertices, graph has {g.n}")
    if ell > g.n and g.n > 0:
        return CliquePathDefect("structure", f"{ell} cliques exceed the vertex count {g.n}")
    if g.n == 0:
        return None if ell == 0 else CliquePathDefect("structure", "cliques in an empty graph")
    if ell == 0:
        return CliquePathDefect("structure", "no cliques but the graph is nonempty")
    uncovered = np.nonzero(cp.lp[1:] == 0)[0]
    if uncovered.size:
        return CliquePathDefect("structure", f"vertex {int(uncovered[0]) + 1} is in no clique",
                                (int(uncovered[0]) + 1,))
    bad = np.nonzero(cp.lp[1:] > cp.rp[1:])[0]
    if bad.size:
        return CliquePathDefect("structure", f"vertex {int(bad[0]) + 1} has lp > rp",
                                (int(bad[0]) + 1,))
    if cp.members.size and (int(cp.rp[1:].max()) > ell or int(cp.members.max()) > g.n
                            or int(cp.members.min()) < 1):
        return CliquePathDefect("structure", "clique index or vertex id out of range")

    # consecutiveness: K_t must equal {v : lp(v) <= t <= rp(v)}
    sizes = cp.sizes()
    block = np.repeat(np.arange(1, ell + 1, dtype=np.int64), sizes)
    mem = cp.members
    inside = (cp.lp[mem] <= block) & (block <= cp.rp[mem])
    if not inside.all():
        k = int(np.argmin(inside))
        v, t = int(mem[k]), int(block[k])
        return CliquePathDefect(
            "consecutiveness",
            f"vertex {v} in clique {t} outside its index range [{cp.lp[v]}, {cp.rp[v]}]",
            (v, t))
    dup = np.nonzero((np.diff(mem) <= 0) & (np.diff(block) == 0))[0]
    if dup.size:
        return CliquePathDefect("structure",
                                f"clique {int(block[dup[0]])} has unsorted or repeated members",
                                (int(block[dup[0]]),))
    stab_count = np.zeros(ell + 2, dtype=np.int64)
    np.add.at(stab_count, cp.lp[1:], 1)
    np.add.at(stab_count, cp.rp[1:].astype(np.int64) + 1, -1)
    stab_count = np.cumsum(stab_count)[:ell + 1]
    short = np.nonzero(sizes != stab_count[1:])[0]
    if short.size:
        t = int(short[0]) + 1
        member = set(int(v) for v in cp.clique(t))
        missing = [v for v in range(1, g.n + 1)
                   if cp.lp[v] <= t <= cp.rp[v] and v not in member]
        return CliquePathDefect(
            "consecutiveness",
            f"vertex {missing[0]}'s cliques are not consecutive: absent from clique {t}",
            (missing[0], t))

    rep = IntervalRepresentation(cp.lp.astype(np.int64), cp.rp.astype(np.int64), 1)
    defect = verify_representation(g, rep)
    if defect is not None:
        if defect.kind == "non-edge-overlap":
            u, v = defect.pair
            t = max(int(cp.lp[u]), int(cp.lp[v]))
            return CliquePathDefect(
                "cliqueness", f"clique {t} contains non-adjacent vertices {u} and {v}",
                (u, v, t))
        u, v = defect.pair
        return CliquePathDefect(
            "coverage", f"edge ({u}, {v}) lies in no clique of the path", (u, v))

    starts = np.bincount(cp.lp[1:], minlength=ell + 1)
    ends = np.bincount(cp.rp[1:], minlength=ell + 1)
    for t in range(1, ell + 1):
        if starts[t] == 0:
            return CliquePathDefect(
                "maximality", f"clique {t} is contained in clique {t - 1}", (t,))
        if ends[t] == 0:
            return CliquePathDefect(
                "maximality", f"clique {t} is contained in clique {t + 1}", (t,))

    count = chordal_clique_count(g)
    if count is None:
        return CliquePathDefect("count", "graph is not chordal, no clique path can exist")
    if count != ell:
        return CliquePathDefect(
            "count", f"path has {ell} cliques but the graph has {count} maximal cliques",
            (ell, count))
    return None
