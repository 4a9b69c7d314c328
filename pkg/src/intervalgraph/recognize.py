"""End-to-end recognition pipelines.

Each recognizer runs its sweeps per connected component, concatenates the
component orderings (components ordered by smallest member), and verifies the
combined final ordering.  A "yes" always carries certificates that pass the
verify module; a "no" carries the final ordering plus a violating triple that
refutes it in O(1).
"""

from dataclasses import dataclass, field

import numpy as np

from .certify import (ordering_to_clique_path, ordering_to_representation,
                      umbrella_to_unit_representation)
from .errors import InputError
from .graph import Graph, VertexOrdering, components, induced_subgraph
from .search import bfs_min_degree_end_vertex, lbfs, lbfs_delta, lbfs_plus, lbfs_up, mcs_delta
from .verify import verify_interval_ordering, verify_umbrella_ordering

UNIT_STRATEGIES = ("three-sweep", "two-sweep-lbfs", "two-sweep-mcs", "bfs-start")


@dataclass(frozen=True)
class RecognitionOutcome:
    verdict: bool
    kind: str                      # "interval" | "unit-interval"
    ordering: "VertexOrdering"     # final ordering, on yes and no alike
    sweeps: dict
    representation: object = None
    clique_path: object = None
    violation: object = None
    strategy: str = None

    def __bool__(self):
        return self.verdict


def _concat_orderings(g, pieces):
    """Concatenate per-component ordering arrays (already in global ids)."""
    order = np.zeros(g.n + 1, dtype=np.int32)
    pos = np.zeros(g.n + 1, dtype=np.int32)
    if pieces:
        seq = pieces[0] if len(pieces) == 1 else np.concatenate(pieces)
        order[1:] = seq
        pos[seq] = np.arange(1, g.n + 1, dtype=np.int32)
    return VertexOrdering(order, pos, g.n)


def _to_global(ordering, mapping):
    """Ordering of a relabeled subgraph back to global ids, as an array."""
    if mapping is None:
        return ordering.order[1:]
    return mapping[ordering.order[1:] - 1]


def recognize_interval(g):
    """The four-sweep interval graph recognizer.

    Per component: tau = LBFS, tau_plus = LBFS+(tau), pi = LBFS-up(tau_plus),
    pi_plus = LBFS+(pi); the verdict is whether the concatenated pi_plus is
    an interval ordering.
    """
    comps = components(g)
    names = ("tau", "tau_plus", "pi", "pi_plus")
    chains = {name: [] for name in names}
    for comp in comps:
        if len(comp) == g.n:
            sub, mapping = g, None
        else:
            sub, mapping = induced_subgraph(g, comp)
        tau, _ = lbfs(sub)
        tau_plus, _ = lbfs_plus(sub, tau)
        pi, _ = lbfs_up(sub, tau_plus)
        pi_plus, _ = lbfs_plus(sub, pi)
        for name, ordering in zip(names, (tau, tau_plus, pi, pi_plus)):
            chains[name].append(_to_global(ordering, mapping))
    sweeps = {name: _concat_orderings(g, chains[name]) for name in names}
    final = sweeps["pi_plus"]
    violation = verify_interval_ordering(g, final)
    if violation is not None:
        return RecognitionOutcome(False, "interval", final, sweeps,
                                  violation=violation)
    return RecognitionOutcome(
        True, "interval", final, sweeps,
        representation=ordering_to_representation(g, final),
        clique_path=ordering_to_clique_path(g, final))


def recognize_unit_interval(g, strategy="three-sweep"):
    """Unit interval recognition; the verdict is whether the final ordering
    is an umbrella ordering.

    Strategies: ``three-sweep`` (LBFS, LBFS+, LBFS+), ``two-sweep-lbfs``
    (LBFS-delta from the last vertex of one LBFS), ``two-sweep-mcs``
    (MCS-delta instead), ``bfs-start`` (LBFS-delta from the minimum-degree
    vertex of the last BFS level).
    """
    if strategy not in UNIT_STRATEGIES:
        raise InputError(f"unknown strategy {strategy!r}; one of {UNIT_STRATEGIES}")
    comps = components(g)
    if strategy == "three-sweep":
        names = ("tau", "sigma", "sigma_plus")
    elif strategy == "bfs-start":
        names = ("sigma",)
    else:
        names = ("tau", "sigma")
    chains = {name: [] for name in names}
    for comp in comps:
        if len(comp) == g.n:
            sub, mapping = g, None
        else:
            sub, mapping = induced_subgraph(g, comp)
        if strategy == "three-sweep":
            tau, _ = lbfs(sub)
            sigma, _ = lbfs_plus(sub, tau)
            sigma_plus, _ = lbfs_plus(sub, sigma)
            parts = {"tau": tau, "sigma": sigma, "sigma_plus": sigma_plus}
            final_part = sigma_plus
        elif strategy == "bfs-start":
            u = bfs_min_degree_end_vertex(sub)
            sigma = lbfs_delta(sub, u)
            parts = {"sigma": sigma}
            final_part = sigma
        else:
            tau, _ = lbfs(sub)
            u = tau.last
            sigma = lbfs_delta(sub, u) if strategy == "two-sweep-lbfs" else mcs_delta(sub, u)
            parts = {"tau": tau, "sigma": sigma}
            final_part = sigma
        for name, ordering in parts.items():
            chains[name].append(_to_global(ordering, mapping))
    sweeps = {name: _concat_orderings(g, chain) for name, chain in chains.items()}
    final = sweeps["sigma_plus" if strategy == "three-sweep" else "sigma"]
    violation = verify_umbrella_ordering(g, final)
    if violation is not None:
        return RecognitionOutcome(False, "unit-interval", final, sweeps,
                                  violation=violation, strategy=strategy)
    return RecognitionOutcome(
        True, "unit-interval", final, sweeps,
        representation=umbrella_to_unit_representation(g, final),
        clique_path=ordering_to_clique_path(g, final),
        strategy=strategy)
