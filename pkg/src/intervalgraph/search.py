"""Graph-search sweeps built on partition refinement.

Every sweep maintains an ordered partition of the unvisited vertices: classes
are kept in strictly decreasing label order, and splitting a class by a
pivot's neighborhood inserts the neighbor part immediately before the
remainder.  Iterating pivot adjacency pre-sorted by a per-sweep canonical key
keeps each class internally sorted by that key, which is how the tie-breaking
rules of the individual variants are realized in O(n+m):

* plain LBFS: key = vertex id, pick the head of the head class;
* LBFS+: key = position in the prior ordering, pick the tail;
* LBFS-delta: key = (degree, id), pick the head, first vertex forced;
* LBFS-up: two parallel class lists, one keyed by (reach, position) for the
  selection of steps 2.5/2.6 and one keyed by position for the d-array test
  of step 2.4 (reach(v) = max position over the closed neighborhood of v).
"""

from dataclasses import dataclass

import numpy as np

from ._jit import njit
from .errors import DisconnectedGraphError, InputError, NotAnLbfsOrderingError
from .graph import Graph, VertexOrdering


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------

@njit
def _adj_by_order(n, indptr, indices, order_seq, out):
    """Rewrite adjacency so each row lists neighbors in order_seq order."""
    fill = np.empty(n + 1, np.int64)
    for v in range(1, n + 1):
        fill[v] = indptr[v]
    for idx in range(n):
        u = order_seq[idx]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            out[fill[w]] = u
            fill[w] += 1


@njit
def _max_nbr_pos(n, indptr, indices, pos, include_self):
    out = np.zeros(n + 1, np.int32)
    for v in range(1, n + 1):
        best = pos[v] if include_self else 0
        for k in range(indptr[v], indptr[v + 1]):
            p = pos[indices[k]]
            if p > best:
                best = p
        out[v] = best
    return out


@njit
def _earlier_nbr_count(n, indptr, indices, pos):
    out = np.zeros(n + 1, np.int32)
    for v in range(1, n + 1):
        c = 0
        for k in range(indptr[v], indptr[v + 1]):
            if pos[indices[k]] < pos[v]:
                c += 1
        out[v] = c
    return out


@njit
def _sweep_kernel(n, indptr, adj, init_order, pick_tail, start,
                  order, pos, snap_end):
    cap = n + 4
    nxt = np.zeros(n + 1, np.int32)
    prv = np.zeros(n + 1, np.int32)
    cls = np.zeros(n + 1, np.int32)
    chead = np.zeros(cap, np.int32)
    ctail = np.zeros(cap, np.int32)
    csize = np.zeros(cap, np.int64)
    cnext = np.zeros(cap, np.int32)
    cprev = np.zeros(cap, np.int32)
    cstamp = np.zeros(cap, np.int32)
    ctwin = np.zeros(cap, np.int32)
    free_stack = np.empty(cap, np.int32)
    free_top = 0
    for cid in range(2, cap):
        free_stack[free_top] = cid
        free_top += 1

    prev = 0
    for idx in range(n):
        v = init_order[idx]
        cls[v] = 1
        prv[v] = prev
        if prev != 0:
            nxt[prev] = v
        else:
            chead[1] = v
        prev = v
    if prev != 0:
        nxt[prev] = 0
        ctail[1] = prev
        csize[1] = n
    first = 1 if n > 0 else 0

    for i in range(1, n + 1):
        c = first
        if i == 1 and start != 0:
            v = start
        elif pick_tail:
            v = ctail[c]
        else:
            v = chead[c]
        order[i] = v
        pos[v] = i
        snap_end[i] = i + csize[c] - 1

        pw = prv[v]
        nw = nxt[v]
        if pw != 0:
            nxt[pw] = nw
        else:
            chead[c] = nw
        if nw != 0:
            prv[nw] = pw
        else:
            ctail[c] = pw
        csize[c] -= 1
        cls[v] = 0
        if csize[c] == 0:
            cp = cprev[c]
            cn = cnext[c]
            if cp != 0:
                cnext[cp] = cn
            else:
                first = cn
            if cn != 0:
                cprev[cn] = cp
            free_stack[free_top] = c
            free_top += 1

        for k in range(indptr[v], indptr[v + 1]):
            w = adj[k]
            cw = cls[w]
            if cw == 0:
                continue
            if cstamp[cw] == i:
                t = ctwin[cw]
            else:
                free_top -= 1
                t = free_stack[free_top]
                chead[t] = 0
                ctail[t] = 0
                csize[t] = 0
                cstamp[t] = 0
                ctwin[t] = 0
                cp = cprev[cw]
                cprev[t] = cp
                cnext[t] = cw
                cprev[cw] = t
                if cp != 0:
                    cnext[cp] = t
                else:
                    first = t
                cstamp[cw] = i
                ctwin[cw] = t
            pw = prv[w]
            nw = nxt[w]
            if pw != 0:
                nxt[pw] = nw
            else:
                chead[cw] = nw
            if nw != 0:
                prv[nw] = pw
            else:
                ctail[cw] = pw
            csize[cw] -= 1
            tw = ctail[t]
            prv[w] = tw
            nxt[w] = 0
            if tw != 0:
                nxt[tw] = w
            else:
                chead[t] = w
            ctail[t] = w
            csize[t] += 1
            cls[w] = t
            if csize[cw] == 0:
                cp = cprev[cw]
                cn = cnext[cw]
                if cp != 0:
                    cnext[cp] = cn
                else:
                    first = cn
                if cn != 0:
                    cprev[cn] = cp
                free_stack[free_top] = cw
                free_top += 1


@njit
def _replay_kernel(n, indptr, indices, forced, snap_end):
    """Replay the refinement with forced picks; 0 on success, else the first
    position whose forced vertex is outside the head class."""
    cap = n + 4
    nxt = np.zeros(n + 1, np.int32)
    prv = np.zeros(n + 1, np.int32)
    cls = np.zeros(n + 1, np.int32)
    chead = np.zeros(cap, np.int32)
    ctail = np.zeros(cap, np.int32)
    csize = np.zeros(cap, np.int64)
    cnext = np.zeros(cap, np.int32)
    cprev = np.zeros(cap, np.int32)
    cstamp = np.zeros(cap, np.int32)
    ctwin = np.zeros(cap, np.int32)
    free_stack = np.empty(cap, np.int32)
    free_top = 0
    for cid in range(2, cap):
        free_stack[free_top] = cid
        free_top += 1

    prev = 0
    for v in range(1, n + 1):
        cls[v] = 1
        prv[v] = prev
        if prev != 0:
            nxt[prev] = v
        else:
            chead[1] = v
        prev = v
    if prev != 0:
        nxt[prev] = 0
        ctail[1] = prev
        csize[1] = n
    first = 1 if n > 0 else 0

    for i in range(1, n + 1):
        v = forced[i]
        c = cls[v]
        if c != first:
            return i
        snap_end[i] = i + csize[c] - 1

        pw = prv[v]
        nw = nxt[v]
        if pw != 0:
            nxt[pw] = nw
        else:
            chead[c] = nw
        if nw != 0:
            prv[nw] = pw
        else:
            ctail[c] = pw
        csize[c] -= 1
        cls[v] = 0
        if csize[c] == 0:
            cp = cprev[c]
            cn = cnext[c]
            if cp != 0:
                cnext[cp] = cn
            else:
                first = cn
            if cn != 0:
                cprev[cn] = cp
            free_stack[free_top] = c
            free_top += 1

        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            cw = cls[w]
            if cw == 0:
                continue
            if cstamp[cw] == i:
                t = ctwin[cw]
            else:
                free_top -= 1
                t = free_stack[free_top]
                chead[t] = 0
                ctail[t] = 0
                csize[t] = 0
                cstamp[t] = 0
                ctwin[t] = 0
                cp = cprev[cw]
                cprev[t] = cp
                cnext[t] = cw
                cprev[cw] = t
                if cp != 0:
                    cnext[cp] = t
                else:
                    first = t
                cstamp[cw] = i
                ctwin[cw] = t
            pw = prv[w]
            nw = nxt[w]
            if pw != 0:
                nxt[pw] = nw
            else:
                chead[cw] = nw
            if nw != 0:
                prv[nw] = pw
            else:
                ctail[cw] = pw
            csize[cw] -= 1
            tw = ctail[t]
            prv[w] = tw
            nxt[w] = 0
            if tw != 0:
                nxt[tw] = w
            else:
                chead[t] = w
            ctail[t] = w
            csize[t] += 1
            cls[w] = t
            if csize[cw] == 0:
                cp = cprev[cw]
                cn = cnext[cw]
                if cp != 0:
                    cnext[cp] = cn
                else:
                    first = cn
                if cn != 0:
                    cprev[cn] = cp
                free_stack[free_top] = cw
                free_top += 1
    return 0


@njit
def _lbfs_up_kernel(n, indptr, adj1, adj2, init1, init2, taupos, d,
                    order, pos, snap_end):
    cap = 2 * n + 6
    nxt1 = np.zeros(n + 1, np.int32)
    prv1 = np.zeros(n + 1, np.int32)
    nxt2 = np.zeros(n + 1, np.int32)
    prv2 = np.zeros(n + 1, np.int32)
    cls = np.zeros(n + 1, np.int32)
    oldcls = np.zeros(n + 1, np.int32)
    chead1 = np.zeros(cap, np.int32)
    ctail1 = np.zeros(cap, np.int32)
    chead2 = np.zeros(cap, np.int32)
    ctail2 = np.zeros(cap, np.int32)
    csize = np.zeros(cap, np.int64)
    cnext = np.zeros(cap, np.int32)
    cprev = np.zeros(cap, np.int32)
    cstamp = np.zeros(cap, np.int32)
    ctwin = np.zeros(cap, np.int32)
    free_stack = np.empty(cap, np.int32)
    dead = np.empty(cap, np.int32)
    free_top = 0
    for cid in range(2, cap):
        free_stack[free_top] = cid
        free_top += 1

    prev = 0
    for idx in range(n):
        v = init1[idx]
        cls[v] = 1
        prv1[v] = prev
        if prev != 0:
            nxt1[prev] = v
        else:
            chead1[1] = v
        prev = v
    if prev != 0:
        nxt1[prev] = 0
        ctail1[1] = prev
    prev = 0
    for idx in range(n):
        v = init2[idx]
        prv2[v] = prev
        if prev != 0:
            nxt2[prev] = v
        else:
            chead2[1] = v
        prev = v
    if prev != 0:
        nxt2[prev] = 0
        ctail2[1] = prev
    csize[1] = n
    first = 1 if n > 0 else 0

    for i in range(1, n + 1):
        c = first
        vp = chead2[c]
        if d[vp] > 0:
            v = vp
        else:
            v = ctail1[c]
        order[i] = v
        pos[v] = i
        snap_end[i] = i + csize[c] - 1
        ndead = 0

        pw = prv1[v]
        nw = nxt1[v]
        if pw != 0:
            nxt1[pw] = nw
        else:
            chead1[c] = nw
        if nw != 0:
            prv1[nw] = pw
        else:
            ctail1[c] = pw
        pw = prv2[v]
        nw = nxt2[v]
        if pw != 0:
            nxt2[pw] = nw
        else:
            chead2[c] = nw
        if nw != 0:
            prv2[nw] = pw
        else:
            ctail2[c] = pw
        csize[c] -= 1
        cls[v] = 0
        if csize[c] == 0:
            cp = cprev[c]
            cn = cnext[c]
            if cp != 0:
                cnext[cp] = cn
            else:
                first = cn
            if cn != 0:
                cprev[cn] = cp
            dead[ndead] = c
            ndead += 1

        # pass 1: split list 1, allocate twin classes, move members
        for k in range(indptr[v], indptr[v + 1]):
            w = adj1[k]
            cw = cls[w]
            if cw == 0:
                continue
            if cstamp[cw] == i:
                t = ctwin[cw]
            else:
                free_top -= 1
                t = free_stack[free_top]
                chead1[t] = 0
                ctail1[t] = 0
                chead2[t] = 0
                ctail2[t] = 0
                csize[t] = 0
                cstamp[t] = 0
                ctwin[t] = 0
                cp = cprev[cw]
                cprev[t] = cp
                cnext[t] = cw
                cprev[cw] = t
                if cp != 0:
                    cnext[cp] = t
                else:
                    first = t
                cstamp[cw] = i
                ctwin[cw] = t
            pw = prv1[w]
            nw = nxt1[w]
            if pw != 0:
                nxt1[pw] = nw
            else:
                chead1[cw] = nw
            if nw != 0:
                prv1[nw] = pw
            else:
                ctail1[cw] = pw
            csize[cw] -= 1
            tw = ctail1[t]
            prv1[w] = tw
            nxt1[w] = 0
            if tw != 0:
                nxt1[tw] = w
            else:
                chead1[t] = w
            ctail1[t] = w
            csize[t] += 1
            cls[w] = t
            oldcls[w] = cw
            if csize[cw] == 0:
                cp = cprev[cw]
                cn = cnext[cw]
                if cp != 0:
                    cnext[cp] = cn
                else:
                    first = cn
                if cn != 0:
                    cprev[cn] = cp
                dead[ndead] = cw
                ndead += 1

        # pass 2: relink list 2 in position order and maintain the d-array
        for k in range(indptr[v], indptr[v + 1]):
            w = adj2[k]
            if cls[w] == 0:
                continue
            if taupos[w] > taupos[v]:
                d[w] -= 1
            cw = oldcls[w]
            t = cls[w]
            pw = prv2[w]
            nw = nxt2[w]
            if pw != 0:
                nxt2[pw] = nw
            else:
                chead2[cw] = nw
            if nw != 0:
                prv2[nw] = pw
            else:
                ctail2[cw] = pw
            tw = ctail2[t]
            prv2[w] = tw
            nxt2[w] = 0
            if tw != 0:
                nxt2[tw] = w
            else:
                chead2[t] = w
            ctail2[t] = w

        for k in range(ndead):
            free_stack[free_top] = dead[k]
            free_top += 1


@njit
def _heap_push(hkey, hid, hn, key, vid):
    j = hn
    hkey[j] = key
    hid[j] = vid
    while j > 0:
        p = (j - 1) >> 1
        if hkey[p] > hkey[j] or (hkey[p] == hkey[j] and hid[p] > hid[j]):
            hkey[p], hkey[j] = hkey[j], hkey[p]
            hid[p], hid[j] = hid[j], hid[p]
            j = p
        else:
            break
    return hn + 1


@njit
def _heap_pop(hkey, hid, hn):
    top_key = hkey[0]
    top_id = hid[0]
    hn -= 1
    hkey[0] = hkey[hn]
    hid[0] = hid[hn]
    j = 0
    while True:
        l = 2 * j + 1
        r = l + 1
        s = j
        if l < hn and (hkey[l] < hkey[s] or (hkey[l] == hkey[s] and hid[l] < hid[s])):
            s = l
        if r < hn and (hkey[r] < hkey[s] or (hkey[r] == hkey[s] and hid[r] < hid[s])):
            s = r
        if s == j:
            break
        hkey[s], hkey[j] = hkey[j], hkey[s]
        hid[s], hid[j] = hid[j], hid[s]
        j = s
    return top_key, top_id, hn


@njit
def _mcs_delta_kernel(n, indptr, indices, deg, start, order, pos):
    big = np.int64(n + 1)
    m = indptr[n + 1] // 2
    cap = n + m + 4
    hkey = np.empty(cap, np.int64)
    hid = np.empty(cap, np.int32)
    hn = 0
    count = np.zeros(n + 1, np.int64)
    visited = np.zeros(n + 1, np.uint8)

    for v in range(1, n + 1):
        if v != start:
            hn = _heap_push(hkey, hid, hn, np.int64(n) * big + deg[v], v)

    v = start
    for i in range(1, n + 1):
        order[i] = v
        pos[v] = i
        visited[v] = 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if visited[w] == 0:
                count[w] += 1
                hn = _heap_push(hkey, hid, hn,
                                (np.int64(n) - count[w]) * big + deg[w], w)
        if i == n:
            break
        while True:
            key, w, hn = _heap_pop(hkey, hid, hn)
            if visited[w] == 0 and key == (np.int64(n) - count[w]) * big + deg[w]:
                v = w
                break


@njit
def _bfs_kernel(n, indptr, indices, root, level, queue):
    for v in range(n + 1):
        level[v] = -1
    level[root] = 0
    queue[0] = root
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if level[w] < 0:
                level[w] = level[v] + 1
                queue[tail] = w
                tail += 1
    return tail


# ---------------------------------------------------------------------------
# traces and wrappers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepTrace:
    """Per-position snapshots of a sweep.

    Snapshot members occupy consecutive positions, so the snapshot taken when
    position i was filled is exactly the vertices at positions
    i..snap_end[i] of the final ordering.
    """

    ordering: VertexOrdering
    snap_end: np.ndarray

    def snapshot(self, i):
        """Vertex ids of the snapshot at position i (ascending)."""
        return sorted(int(v) for v in self.ordering.order[i:self.snap_end[i] + 1])

    def snapshot_positions(self, i):
        return range(i, int(self.snap_end[i]) + 1)

    def earlier_neighbors(self, g, i):
        """N_sigma(v) for the vertex v visited at position i."""
        v = self.ordering.vertex_at(i)
        pos = self.ordering.pos
        return sorted(int(w) for w in g.neighbors(v) if pos[w] < i)

    def label(self, g, i):
        """Label of the snapshot at position i: positions of N_sigma(v)."""
        pos = self.ordering.pos
        return sorted(int(pos[w]) for w in self.earlier_neighbors(g, i))


def _as_ordering(g, order, pos):
    return VertexOrdering(order, pos, g.n)


def _check_permutation(g, sigma):
    if not isinstance(sigma, VertexOrdering):
        sigma = VertexOrdering.from_list(list(sigma), universe=g.n)
    if sigma.universe != g.n or len(sigma) != g.n:
        raise InputError(
            f"ordering covers {len(sigma)} of {g.n} vertices; need a permutation")
    return sigma


def _check_vertex(g, v):
    v = int(v)
    if not 1 <= v <= g.n:
        raise InputError(f"vertex {v} out of range 1..{g.n}")
    return v


def lbfs(g, start=None):
    """LBFS with smallest-id tie-breaking; deterministic.

    ``start`` forces the first visited vertex (the remaining ties still break
    by smallest id).  Returns ``(ordering, trace)``.
    """
    order = np.zeros(g.n + 1, dtype=np.int32)
    pos = np.zeros(g.n + 1, dtype=np.int32)
    snap_end = np.zeros(g.n + 1, dtype=np.int32)
    init = np.arange(1, g.n + 1, dtype=np.int32)
    s = _check_vertex(g, start) if start is not None else 0
    _sweep_kernel(g.n, g.indptr, g.indices, init, False, s, order, pos, snap_end)
    ordering = _as_ordering(g, order, pos)
    return ordering, SweepTrace(ordering, snap_end)


def lbfs_plus(g, sigma):
    """LBFS+ relative to a prior LBFS ordering: break every tie by picking
    the latest vertex of the prior ordering.  Deterministic given sigma."""
    sigma = _check_permutation(g, sigma)
    ok, at = is_lbfs_ordering(g, sigma)
    if not ok:
        raise NotAnLbfsOrderingError(at)
    adj = np.empty(len(g.indices), dtype=np.int32)
    _adj_by_order(g.n, g.indptr, g.indices, sigma.order[1:], adj)
    order = np.zeros(g.n + 1, dtype=np.int32)
    pos = np.zeros(g.n + 1, dtype=np.int32)
    snap_end = np.zeros(g.n + 1, dtype=np.int32)
    _sweep_kernel(g.n, g.indptr, adj, sigma.order[1:], True, 0, order, pos, snap_end)
    ordering = _as_ordering(g, order, pos)
    return ordering, SweepTrace(ordering, snap_end)


def lbfs_up(g, tau_plus):
    """The exposed-vertex sweep: produces a well-anchored ordering when the
    graph is interval and ``tau_plus`` is an LBFS+ ordering.

    Per iteration with head class S and p/q the minimum/maximum tau_plus
    positions in S: visit v_p if it still has an unvisited neighbor earlier
    than p (tracked by the d-array); otherwise visit the class member
    maximizing (reach, position), which is a vertex with a neighbor beyond q
    when one exists and exactly v_q when none does.
    """
    tau_plus = _check_permutation(g, tau_plus)
    ok, at = is_lbfs_ordering(g, tau_plus)
    if not ok:
        raise NotAnLbfsOrderingError(at)
    taupos = tau_plus.pos
    reach = _max_nbr_pos(g.n, g.indptr, g.indices, taupos, True)
    d = _earlier_nbr_count(g.n, g.indptr, g.indices, taupos)
    init1 = (1 + np.lexsort((taupos[1:], reach[1:]))).astype(np.int32)
    init2 = tau_plus.order[1:]
    adj1 = np.empty(len(g.indices), dtype=np.int32)
    adj2 = np.empty(len(g.indices), dtype=np.int32)
    _adj_by_order(g.n, g.indptr, g.indices, init1, adj1)
    _adj_by_order(g.n, g.indptr, g.indices, init2, adj2)
    order = np.zeros(g.n + 1, dtype=np.int32)
    pos = np.zeros(g.n + 1, dtype=np.int32)
    snap_end = np.zeros(g.n + 1, dtype=np.int32)
    _lbfs_up_kernel(g.n, g.indptr, adj1, adj2, init1, init2, taupos, d,
                    order, pos, snap_end)
    ordering = _as_ordering(g, order, pos)
    return ordering, SweepTrace(ordering, snap_end)


def lbfs_delta(g, u):
    """LBFS from u breaking every later tie by minimum degree, then id."""
    u = _check_vertex(g, u)
    deg = g.degrees()
    ids = np.arange(g.n + 1, dtype=np.int32)
    init = (1 + np.lexsort((ids[1:], deg[1:]))).astype(np.int32)
    adj = np.empty(len(g.indices), dtype=np.int32)
    _adj_by_order(g.n, g.indptr, g.indices, init, adj)
    order = np.zeros(g.n + 1, dtype=np.int32)
    pos = np.zeros(g.n + 1, dtype=np.int32)
    snap_end = np.zeros(g.n + 1, dtype=np.int32)
    _sweep_kernel(g.n, g.indptr, adj, init, False, u, order, pos, snap_end)
    return _as_ordering(g, order, pos)


def mcs_delta(g, u):
    """Maximum cardinality search from u; ties by minimum degree, then id."""
    u = _check_vertex(g, u)
    order = np.zeros(g.n + 1, dtype=np.int32)
    pos = np.zeros(g.n + 1, dtype=np.int32)
    _mcs_delta_kernel(g.n, g.indptr, g.indices, g.degrees(), u, order, pos)
    return _as_ordering(g, order, pos)


def bfs_min_degree_end_vertex(g):
    """Minimum-degree vertex of the last BFS level (root = smallest id).

    For a connected unit interval graph the result is an LBFS end vertex.
    """
    if g.n == 0:
        raise InputError("empty graph has no vertices")
    level = np.empty(g.n + 1, dtype=np.int32)
    queue = np.empty(g.n + 1, dtype=np.int32)
    visited = _bfs_kernel(g.n, g.indptr, g.indices, 1, level, queue)
    if visited != g.n:
        raise DisconnectedGraphError("BFS end-vertex heuristic needs a connected graph")
    last = int(level[1:].max())
    cand = np.nonzero(level == last)[0]
    deg = g.degrees()[cand]
    return int(cand[np.lexsort((cand, deg))[0]])


def is_lbfs_ordering(g, sigma):
    """Check sigma by replaying the sweep with forced choices.

    Returns ``(True, 0)`` or ``(False, p)`` where p is the first position
    whose vertex lies outside the head class.
    """
    sigma = _check_permutation(g, sigma)
    snap_end = np.zeros(g.n + 1, dtype=np.int32)
    at = _replay_kernel(g.n, g.indptr, g.indices, sigma.order, snap_end)
    return (at == 0), int(at)


def replay_trace(g, sigma):
    """Trace of an externally supplied LBFS ordering (its snapshots)."""
    sigma = _check_permutation(g, sigma)
    snap_end = np.zeros(g.n + 1, dtype=np.int32)
    at = _replay_kernel(g.n, g.indptr, g.indices, sigma.order, snap_end)
    if at != 0:
        raise NotAnLbfsOrderingError(int(at))
    return SweepTrace(sigma, snap_end)
