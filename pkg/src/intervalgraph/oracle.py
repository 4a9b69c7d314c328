"""Brute-force ground truth and structural predicates.

Everything here is exponential-time by design and guarded by explicit size
limits that fail loudly.  The two brute-force recognizers search the space of
all vertex orderings; they prune with the prefix-feasibility facts below,
which the test suite cross-validates against literal permutation enumeration
on small graphs.

* A prefix extends to an interval ordering only if every newly placed vertex
  is adjacent to every already-placed vertex that still has an unplaced
  neighbor (so feasibility depends on the placed SET only, enabling a
  bitmask DP).
* An umbrella prefix additionally needs each new vertex's placed neighbors
  to be a suffix of the prefix, and true twins may be forced into id order.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._jit import njit
from .errors import SizeGuardExceeded
from .graph import VertexOrdering, components, induced_subgraph
from .search import lbfs, lbfs_plus

DEFAULT_GUARD = 9


@njit
def _interval_dp(n, adjmask):
    full = (np.int64(1) << n) - 1
    if full == 0:
        return True
    seen = np.zeros(1 << n, np.uint8)
    stack = np.empty(1 << n, np.int64)
    seen[0] = 1
    stack[0] = 0
    top = 1
    while top > 0:
        top -= 1
        state = stack[top]
        if state == full:
            return True
        need = np.int64(0)
        for u in range(n):
            if (state >> u) & 1 and (adjmask[u] & ~state & full) != 0:
                need |= np.int64(1) << u
        for x in range(n):
            bx = np.int64(1) << x
            if state & bx:
                continue
            if need & ~adjmask[x]:
                continue
            nxt = state | bx
            if seen[nxt] == 0:
                seen[nxt] = 1
                stack[top] = nxt
                top += 1
    return False


@njit
def _umbrella_dfs(n, adjmask, twin_prev):
    if n == 0:
        return True
    full = (np.int64(1) << n) - 1
    order = np.empty(n, np.int64)
    cand = np.zeros(n + 1, np.int64)
    needs = np.zeros(n + 1, np.int64)
    amask = np.zeros(n + 1, np.int64)
    dep = 0
    while dep >= 0:
        if dep == n:
            return True
        state = amask[dep]
        x = cand[dep]
        advanced = False
        while x < n:
            bx = np.int64(1) << x
            if (state & bx) == 0 and (twin_prev[x] & ~state) == 0 \
                    and (needs[dep] & ~adjmask[x]) == 0:
                placed_nbrs = adjmask[x] & state
                t = 0
                mm = placed_nbrs
                while mm:
                    mm &= mm - 1
                    t += 1
                ok = True
                for k in range(dep - t, dep):
                    if ((adjmask[x] >> order[k]) & 1) == 0:
                        ok = False
                        break
                if ok:
                    order[dep] = x
                    cand[dep] = x + 1
                    nstate = state | bx
                    nd = np.int64(0)
                    for u in range(n):
                        if (nstate >> u) & 1 and (adjmask[u] & ~nstate & full) != 0:
                            nd |= np.int64(1) << u
                    amask[dep + 1] = nstate
                    needs[dep + 1] = nd
                    cand[dep + 1] = 0
                    dep += 1
                    advanced = True
                    break
            x += 1
        if not advanced:
            dep -= 1
    return False


def _local_masks(g, members):
    """Adjacency bitmasks of the induced subgraph on members, 0-based."""
    local = {v: i for i, v in enumerate(members)}
    masks = np.zeros(len(members), dtype=np.int64)
    for v in members:
        mask = 0
        for w in g.neighbors(v):
            w = int(w)
            if w in local:
                mask |= 1 << local[w]
        masks[local[v]] = mask
    return masks


def _guard(what, size, limit):
    if size > limit:
        raise SizeGuardExceeded(what, size, limit)


def brute_force_interval(g, max_n=DEFAULT_GUARD):
    """True iff some vertex ordering passes verify_interval_ordering."""
    _guard("brute_force_interval", g.n, max_n)
    for comp in components(g):
        if not _interval_dp(len(comp), _local_masks(g, comp)):
            return False
    return True


def brute_force_umbrella(g, max_n=DEFAULT_GUARD):
    """True iff some vertex ordering passes verify_umbrella_ordering."""
    _guard("brute_force_umbrella", g.n, max_n)
    for comp in components(g):
        masks = _local_masks(g, comp)
        k = len(comp)
        closed = [masks[i] | (1 << i) for i in range(k)]
        twin_prev = np.zeros(k, dtype=np.int64)
        first_of_class = {}
        for i in range(k):
            key = closed[i]
            if key in first_of_class:
                prev = first_of_class[key][-1]
                twin_prev[i] = twin_prev[prev] | (1 << prev)
                first_of_class[key].append(i)
            else:
                first_of_class[key] = [i]
        if not _umbrella_dfs(k, masks, twin_prev):
            return False
    return True


# ---------------------------------------------------------------------------
# LBFS enumeration
# ---------------------------------------------------------------------------

def _refine(partition, v, nbrs):
    out = []
    for cls in partition:
        inside = [u for u in cls if u != v and u in nbrs]
        outside = [u for u in cls if u != v and u not in nbrs]
        if inside:
            out.append(inside)
        if outside:
            out.append(outside)
    return out


def enumerate_lbfs(g, max_n=DEFAULT_GUARD):
    """The set of all LBFS orderings, over every tie-breaking choice."""
    _guard("enumerate_lbfs", g.n, max_n)
    if g.n == 0:
        return {()}
    nbr_sets = {v: g.neighbor_set(v) for v in g.vertices()}
    out = set()

    def walk(partition, prefix):
        if not partition:
            out.add(tuple(prefix))
            return
        for v in partition[0]:
            walk(_refine(partition, v, nbr_sets[v]), prefix + [v])

    walk([list(g.vertices())], [])
    return out


def enumerate_end_vertices(g, max_n=DEFAULT_GUARD):
    """All vertices that end some LBFS ordering.

    Branches over every tie choice, memoizing on the refinement state (the
    ordered partition as sets), which prunes equivalent branches.
    """
    _guard("enumerate_end_vertices", g.n, max_n)
    if g.n == 0:
        return frozenset()
    nbr_sets = {v: g.neighbor_set(v) for v in g.vertices()}
    memo = {}

    def walk(partition):
        if len(partition) == 1 and len(partition[0]) == 1:
            return frozenset(partition[0])
        key = tuple(frozenset(c) for c in partition)
        got = memo.get(key)
        if got is not None:
            return got
        acc = set()
        for v in partition[0]:
            acc |= walk(_refine(partition, v, nbr_sets[v]))
        got = frozenset(acc)
        memo[key] = got
        return got

    return walk([list(g.vertices())])


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    subset: tuple
    splitters: tuple
    is_module: bool
    is_clique: bool


def structure(g, subset):
    """Splitters of a vertex set, plus module and clique flags."""
    s = set(int(v) for v in subset)
    size = len(s)
    splitters = []
    for x in g.vertices():
        if x in s:
            continue
        hits = sum(1 for w in g.neighbors(x) if int(w) in s)
        if 0 < hits < size:
            splitters.append(x)
    clique = all(
        sum(1 for w in g.neighbors(v) if int(w) in s) == size - 1 for v in s)
    return StructureReport(tuple(sorted(s)), tuple(splitters),
                           is_module=not splitters, is_clique=clique)


def is_simplicial(g, v):
    """True iff the closed neighborhood of v is a clique."""
    nbrs = g.neighbor_set(v)
    return all(
        len(nbrs & g.neighbor_set(u)) == len(nbrs) - 1 for u in nbrs)


def exposed_vertices(g, trace, i):
    """Members of the snapshot at position i having a neighbor after it."""
    end = int(trace.snap_end[i])
    pos = trace.ordering.pos
    out = []
    for v in trace.snapshot(i):
        if any(pos[w] > end for w in g.neighbors(v)):
            out.append(v)
    return out


@dataclass(frozen=True)
class WellAnchoredDefect:
    position: int
    chosen: int
    snapshot: tuple
    exposed: tuple
    reason: str

    def __str__(self):
        return (f"snapshot at position {self.position} starts at {self.chosen}: "
                f"{self.reason} (exposed: {list(self.exposed)})")


def check_well_anchored(g, pi, trace=None, max_enum=DEFAULT_GUARD):
    """Check that every snapshot of pi starts at an exposed vertex when one
    exists, and at an end vertex of the snapshot's induced subgraph otherwise.

    The end-vertex subcheck enumerates LBFS branches up to ``max_enum``
    vertices; beyond that it falls back to the flipping test (an LBFS from
    the candidate, flipped by LBFS+, ends at the candidate iff it is an end
    vertex of an interval graph).  The fallback can only misreport on
    non-interval snapshots, never in the passing direction.

    Returns ``None`` or the first offending snapshot.
    """
    from .search import replay_trace

    if trace is None:
        trace = replay_trace(g, pi)
    ordering = trace.ordering
    pos = ordering.pos
    maxnbr = np.zeros(g.n + 1, dtype=np.int64)
    for v in g.vertices():
        row = g.neighbors(v)
        maxnbr[v] = int(pos[row].max()) if len(row) else 0

    for i in range(1, g.n + 1):
        end = int(trace.snap_end[i])
        if end == i:
            continue
        members = [int(v) for v in ordering.order[i:end + 1]]
        chosen = members[0]
        exposed = [v for v in sorted(members) if maxnbr[v] > end]
        if exposed:
            if chosen not in exposed:
                return WellAnchoredDefect(i, chosen, tuple(sorted(members)),
                                          tuple(exposed), "not an exposed vertex")
            continue
        member_set = set(members)
        if all(sum(1 for w in g.neighbors(v) if int(w) in member_set)
               == len(members) - 1 for v in members):
            continue
        sub, mapping = induced_subgraph(g, members)
        z = int(np.searchsorted(mapping, chosen)) + 1
        if len(members) <= max_enum:
            good = z in enumerate_end_vertices(sub, max_n=max_enum)
        else:
            tau, _ = lbfs(sub, start=z)
            tau_plus, _ = lbfs_plus(sub, tau)
            good = tau_plus.last == z
        if not good:
            return WellAnchoredDefect(i, chosen, tuple(sorted(members)), (),
                                      "not an end vertex of the snapshot subgraph")
    return None
