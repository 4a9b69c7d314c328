"""Interval and unit interval graph recognition by multi-sweep LBFS.

Recognizers return verifiable certificates: an interval ordering, an exact
rational interval representation, and a clique path on acceptance, or a
violating triple refuting the final ordering on rejection.
"""

from ._jit import NUMBA_ENABLED
from .errors import (DisconnectedGraphError, InputError, InvalidCliquePathError,
                     NotAnLbfsOrderingError, NotIntervalOrderingError,
                     NotUmbrellaOrderingError, ParseError, SizeGuardExceeded)
from .graph import (CliquePath, Graph, IntervalRepresentation, OrderingViolation,
                    VertexOrdering, build_graph, components, induced_subgraph,
                    restrict)
from .search import (SweepTrace, bfs_min_degree_end_vertex, is_lbfs_ordering,
                     lbfs, lbfs_delta, lbfs_plus, lbfs_up, mcs_delta,
                     replay_trace)
from .verify import (CliquePathDefect, RepresentationDefect, chordal_clique_count,
                     verify_clique_path, verify_interval_ordering,
                     verify_representation, verify_umbrella_ordering)
from .certify import (clique_path_to_representation, ordering_to_clique_path,
                      ordering_to_representation, representation_to_graph,
                      umbrella_to_unit_representation)
from .recognize import (UNIT_STRATEGIES, RecognitionOutcome, recognize_interval,
                        recognize_unit_interval)
from .oracle import (StructureReport, WellAnchoredDefect, brute_force_interval,
                     brute_force_umbrella, check_well_anchored,
                     enumerate_end_vertices, enumerate_lbfs, exposed_vertices,
                     is_simplicial, structure)
from .generate import GeneratedGraph, generate, gnp, random_interval, random_unit

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
