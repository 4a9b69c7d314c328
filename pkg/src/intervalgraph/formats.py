"""Graph file parsing and the JSON certificate schema.

Edgelist format: first non-comment line ``n m``, then m lines ``u v``,
1-based ids, ``#`` comments.  DIMACS format: ``c`` comment lines, one
``p edge n m`` header, ``e u v`` edge lines.

Certificates serialize rationals as strings, ``"7"`` or ``"23/5"``, so the
JSON round-trips losslessly; document layout is deterministic (sorted keys,
no whitespace) so equal outcomes are byte-identical.
"""

import json
from fractions import Fraction

from .errors import ParseError
from .graph import (CliquePath, Graph, IntervalRepresentation, OrderingViolation,
                    VertexOrdering, build_graph)


def _tokens(stream):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_edgelist(stream):
    it = _tokens(stream)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise ParseError("empty input: missing 'n m' header") from None
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: header must be two integers") from None
    edges = []
    for lineno, line in it:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges but {len(edges)} lines follow")
    return n, edges


def _parse_dimacs(stream):
    n = m = None
    edges = []
    for lineno, line in _tokens(stream):
        kind = line[0]
        if kind == "c":
            continue
        parts = line.split()
        if kind == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge n m'")
            n, m = int(parts[2]), int(parts[3])
        elif kind == "e":
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ParseError(f"line {lineno}: unknown record {line!r}")
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges but {len(edges)} appear")
    return n, edges


def parse_graph(source, fmt="edgelist"):
    """Parse a :class:`Graph` from a path, file object, or text."""
    if hasattr(source, "read"):
        stream = source.read().splitlines()
    elif isinstance(source, str) and "\n" in source:
        stream = source.splitlines()
    else:
        with open(source) as fh:
            stream = fh.read().splitlines()
    if fmt == "edgelist":
        n, edges = _parse_edgelist(stream)
    elif fmt == "dimacs":
        n, edges = _parse_dimacs(stream)
    else:
        raise ParseError(f"unknown format {fmt!r}; use edgelist or dimacs")
    return build_graph(n, edges)


def write_edgelist(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON certificates
# ---------------------------------------------------------------------------

def rational_str(num, den):
    f = Fraction(int(num), int(den))
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {s!r}") from None


def representation_to_json(rep):
    return {str(v): [rational_str(rep.left_num[v], rep.den),
                     rational_str(rep.right_num[v], rep.den)]
            for v in range(1, rep.n + 1)}


def representation_from_json(obj):
    intervals = {}
    for key, pair in obj.items():
        if len(pair) != 2:
            raise ParseError(f"interval of vertex {key} must be [left, right]")
        intervals[int(key)] = (parse_rational(pair[0]), parse_rational(pair[1]))
    return IntervalRepresentation.from_fractions(intervals)


def violation_to_json(v):
    out = {"i": v.i, "j": v.j, "k": v.k}
    if v.vertices:
        out["vertices"] = list(v.vertices)
    if v.side != "forward":
        out["side"] = v.side
    return out


def outcome_to_json(outcome):
    doc = {
        "verdict": "yes" if outcome.verdict else "no",
        "kind": outcome.kind,
        "ordering": outcome.ordering.to_list(),
        "sweeps": {name: o.to_list() for name, o in outcome.sweeps.items()},
    }
    if outcome.strategy:
        doc["strategy"] = outcome.strategy
    if outcome.verdict:
        doc["intervals"] = representation_to_json(outcome.representation)
        doc["clique_path"] = outcome.clique_path.as_lists()
    else:
        doc["violation"] = violation_to_json(outcome.violation)
    return doc


def certificate_from_json(doc, universe):
    """Extract (ordering, representation, clique_path, violation) from an
    outcome document for independent re-verification."""
    ordering = VertexOrdering.from_list(doc["ordering"], universe=universe)
    rep = representation_from_json(doc["intervals"]) if "intervals" in doc else None
    cp = (CliquePath.from_cliques(universe, doc["clique_path"])
          if "clique_path" in doc else None)
    violation = None
    if "violation" in doc:
        v = doc["violation"]
        violation = OrderingViolation(v["i"], v["j"], v["k"],
                                      tuple(v.get("vertices", ())),
                                      v.get("side", "forward"))
    return ordering, rep, cp, violation


def dumps(doc):
    """Deterministic JSON encoding (byte-identical for equal documents)."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
