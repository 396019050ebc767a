"""Core graph and edge-weight types plus the three structural operations
(edge insertion, subdivide-and-match, edge switch).

Graphs are simple, loopless, undirected, with 0-indexed vertices and a
stable edge ordering: edge ``j`` always refers to ``edges[j]``.  Weights
are exact ``fractions.Fraction`` values; nothing in this module touches
floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


class ParseError(GraphError):
    """Malformed edge-list text; message names the offending line."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus an ordered edge list.

    Edges are stored normalized as ``(u, v)`` with ``u < v``.  Instances
    are immutable and safe to share across threads.
    """

    n: int
    edges: tuple

    def __init__(self, n, edges):
        pairs = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
            pairs.append(e)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(pairs))

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def adjacency(self):
        """Neighbor lists, sorted."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incident_edges(self):
        """For each vertex, the indices of its incident edges."""
        inc = [[] for _ in range(self.n)]
        for j, (u, v) in enumerate(self.edges):
            inc[u].append(j)
            inc[v].append(j)
        return tuple(tuple(i) for i in inc)

    @cached_property
    def edge_index(self):
        return {e: j for j, e in enumerate(self.edges)}

    def has_edge(self, u, v):
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def degree(self, v):
        return len(self.adjacency[v])

    @cached_property
    def degrees(self):
        return tuple(len(a) for a in self.adjacency)

    def regularity(self):
        """The common degree k, or None if the graph is not regular."""
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def components(self):
        """Vertex sets of the connected components, each sorted."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def relabel(self, perm):
        """New graph with vertex i renamed perm[i] (edge order follows)."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Domain(enum.Enum):
    """Which weight polytope a WeightPoint lives in."""

    FULL = "full"                          # weights >= 0, sum = m
    DEGREE_PRESERVING = "degree_preserving"  # weighted degree = unweighted degree


@dataclass(frozen=True)
class WeightPoint:
    """Nonnegative exact rational edge weights on a graph.

    ``FULL`` points satisfy sum(x) = m exactly; ``DEGREE_PRESERVING``
    points keep every weighted vertex degree equal to the unweighted one.
    """

    graph: Graph
    weights: tuple
    domain: Domain

    def __init__(self, graph, weights, domain=Domain.FULL):
        ws = tuple(Fraction(w) for w in weights)
        if len(ws) != graph.m:
            raise GraphError(f"expected {graph.m} weights, got {len(ws)}")
        if any(w < 0 for w in ws):
            raise GraphError("negative edge weight")
        if domain is Domain.FULL:
            if sum(ws) != graph.m:
                raise GraphError(
                    f"FULL domain requires weight sum {graph.m}, got {sum(ws)}")
        elif domain is Domain.DEGREE_PRESERVING:
            for v in range(graph.n):
                dv = sum(ws[j] for j in graph.incident_edges[v])
                if dv != graph.degree(v):
                    raise GraphError(
                        f"degree-preserving violation at vertex {v}: "
                        f"weighted degree {dv} != {graph.degree(v)}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "domain", domain)

    @classmethod
    def unit(cls, graph, domain=Domain.FULL):
        """The all-ones weighting (the unweighted graph)."""
        return cls(graph, [Fraction(1)] * graph.m, domain)

    @property
    def is_interior(self):
        return all(w > 0 for w in self.weights)

    def weighted_degree(self, v):
        return sum(self.weights[j] for j in self.graph.incident_edges[v])

    def replace_weights(self, weights):
        return WeightPoint(self.graph, weights, self.domain)

    def __repr__(self):
        return f"WeightPoint({self.graph!r}, domain={self.domain.value})"


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def insert_edge(g, e1, e2):
    """Subdivide edges e1 and e2 and join the two midpoints.

    The midpoint of ``e1`` becomes vertex ``n``, that of ``e2`` vertex
    ``n+1``.  Surviving edges keep their relative order, followed by the
    four half-edges and the new connecting edge.  A cubic input yields a
    cubic output.
    """
    if e1 == e2:
        raise GraphError("edge insertion needs two distinct edges")
    if not (0 <= e1 < g.m and 0 <= e2 < g.m):
        raise GraphError(f"edge index out of range: ({e1},{e2})")
    u1, v1 = g.edges[e1]
    u2, v2 = g.edges[e2]
    a, b = g.n, g.n + 1
    new_edges = [e for j, e in enumerate(g.edges) if j not in (e1, e2)]
    new_edges += [(u1, a), (a, v1), (u2, b), (b, v2), (a, b)]
    return Graph(g.n + 2, new_edges)


def edge_switch(g, a, b):
    """Replace edges (u1,u2),(u3,u4) by (u1,u4),(u3,u2).

    ``a`` and ``b`` are ordered vertex pairs; they must be present,
    vertex-disjoint, and neither replacement edge may already exist.
    Every vertex keeps its degree.
    """
    u1, u2 = a
    u3, u4 = b
    if not g.has_edge(u1, u2) or not g.has_edge(u3, u4):
        raise GraphError("switch edges must be present in the graph")
    if len({u1, u2, u3, u4}) != 4:
        raise GraphError("switch edges must be vertex-disjoint")
    if g.has_edge(u1, u4) or g.has_edge(u3, u2):
        raise GraphError("replacement edge already present")
    drop = {(min(u1, u2), max(u1, u2)), (min(u3, u4), max(u3, u4))}
    new_edges = [e for e in g.edges if e not in drop]
    new_edges += [(u1, u4), (u3, u2)]
    return Graph(g.n, new_edges)


#: tag accepted by subdivide_and_match in place of a Graph: the loopless
#: two-vertex cubic multigraph (three parallel edges), which cannot be a
#: Graph value itself.
G2 = "g2"


def subdivide_and_match(g, counts, matching):
    """Replace each edge by a path and join the new vertices by a matching.

    Edge ``j`` with count ``c`` becomes a path with ``c`` interior
    vertices; new vertices are numbered consecutively from ``n`` in edge
    order, then path order (from the lower-numbered endpoint).  The
    matching is a list of pairs of new-vertex ids and must cover each new
    vertex exactly once.  ``g`` may also be the literal tag ``"g2"`` for
    the two-vertex triple-edge multigraph (counts then must all be >= 1
    so the result is simple).
    """
    if g == G2:
        n0 = 2
        base_edges = [(0, 1), (0, 1), (0, 1)]
    else:
        n0 = g.n
        base_edges = list(g.edges)
    if len(counts) != len(base_edges):
        raise GraphError(f"expected {len(base_edges)} counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise GraphError("subdivision counts must be nonnegative")
    total = sum(counts)
    if total % 2 != 0:
        raise GraphError(f"total subdivision count {total} is odd")

    new_edges = []
    next_id = n0
    new_ids = []
    for (u, v), c in zip(base_edges, counts):
        if c == 0:
            new_edges.append((u, v))
            continue
        chain = [u] + list(range(next_id, next_id + c)) + [v]
        new_ids.extend(range(next_id, next_id + c))
        next_id += c
        new_edges.extend(zip(chain, chain[1:]))

    expected = set(new_ids)
    covered = []
    for pair in matching:
        if len(pair) != 2:
            raise GraphError(f"matching entry {pair} is not a pair")
        covered.extend(pair)
    if sorted(covered) != sorted(expected):
        raise GraphError("matching is not a perfect matching on the new vertices")
    path_set = {(min(u, v), max(u, v)) for u, v in new_edges}
    for u, v in matching:
        if (min(u, v), max(u, v)) in path_set:
            raise GraphError(f"matching edge ({u},{v}) duplicates a path edge")
        new_edges.append((u, v))
    return Graph(next_id, new_edges)


def disjoint_union(g1, g2):
    """Disjoint union; g2's vertices are shifted up by g1.n."""
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return Graph(g1.n + g2.n, edges)


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def _parse_weight(token, line_no):
    try:
        if "/" in token:
            p, q = token.split("/")
            w = Fraction(int(p), int(q))
        else:
            w = Fraction(int(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(line_no, f"bad weight {token!r}") from exc
    if w < 0:
        raise ParseError(line_no, f"negative weight {token}")
    return w


def parse_graph(text):
    """Parse the edge-list format into a WeightPoint (domain FULL).

    Line 1 is ``n m``; each of the following m lines is ``u v`` or
    ``u v w`` with w an integer or ``p/q``.  ``#`` starts a comment.
    Omitted weights default to 1.
    """
    lines = text.split("\n")
    items = []
    for idx, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            items.append((idx, body))
    if not items:
        raise ParseError(1, "empty input")
    head_no, head = items[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError(head_no, f"header must be 'n m', got {head!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParseError(head_no, f"header must be 'n m', got {head!r}") from exc
    if n < 0 or m < 0:
        raise ParseError(head_no, "n and m must be nonnegative")
    if len(items) - 1 != m:
        raise ParseError(head_no, f"expected {m} edge lines, found {len(items) - 1}")

    edges = []
    weights = []
    seen = set()
    for line_no, body in items[1:]:
        parts = body.split()
        if len(parts) not in (2, 3):
            raise ParseError(line_no, f"edge line must be 'u v' or 'u v w', got {body!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(line_no, f"bad vertex in {body!r}") from exc
        if u == v:
            raise ParseError(line_no, f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"vertex out of range in ({u},{v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(line_no, f"duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
        weights.append(_parse_weight(parts[2], line_no) if len(parts) == 3 else Fraction(1))

    graph = Graph(n, edges)
    try:
        return WeightPoint(graph, weights, Domain.FULL)
    except GraphError as exc:
        raise ParseError(head_no, str(exc)) from exc


def emit_graph(w):
    """Edge-list text for a WeightPoint or Graph; parse_graph round-trips it."""
    if isinstance(w, Graph):
        w = WeightPoint.unit(w)
    g = w.graph
    out = [f"{g.n} {g.m}"]
    for (u, v), x in zip(g.edges, w.weights):
        out.append(f"{u} {v}" if x == 1 else f"{u} {v} {x}")
    return "\n".join(out) + "\n"


def emit_dot(w, name="G"):
    """Undirected DOT text; edges are labeled with their weight when != 1."""
    if isinstance(w, Graph):
        w = WeightPoint.unit(w)
    out = [f"graph {name} {{"]
    for (u, v), x in zip(w.graph.edges, w.weights):
        label = "" if x == 1 else f' [label="{x}"]'
        out.append(f"  {u} -- {v}{label};")
    out.append("}")
    return "\n".join(out) + "\n"
