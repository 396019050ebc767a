"""Named graph families with fixed, documented vertex labelings."""

from __future__ import annotations

from .graphs import Graph, GraphError


def complete(n):
    """K_n; edges in lexicographic order."""
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    """K_{a,b}; left part 0..a-1, right part a..a+b-1, edges lexicographic."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n):
    """C_n with edges (0,1), (1,2), ..., (n-2,n-1), (0,n-1)."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def path(n):
    """P_n with n vertices and n-1 edges (i, i+1)."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def moebius_ladder(n):
    """Moebius ladder on n vertices: C_n plus the n/2 'opposite' chords.

    n must be even and >= 4; the 8-vertex member is the cubic graph with
    the most spanning trees on 8 vertices.
    """
    if n < 4 or n % 2 != 0:
        raise GraphError("moebius ladder needs even n >= 4")
    half = n // 2
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    edges += [(i, i + half) for i in range(half)]
    return Graph(n, edges)


def hypercube(k):
    """Q_k: vertices are k-bit labels, edges join labels at Hamming distance 1."""
    if k < 1:
        raise GraphError("hypercube needs k >= 1")
    n = 1 << k
    edges = []
    for v in range(n):
        for bit in range(k):
            u = v ^ (1 << bit)
            if v < u:
                edges.append((v, u))
    return Graph(n, edges)


def petersen():
    """The Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def lcf(code, reps):
    """Cubic Hamiltonian graph from LCF notation ``code ** reps``.

    Vertices 0..n-1 form a cycle; vertex i also joins i + code[i mod len].
    Codes producing loops, chords that coincide with cycle edges, or a
    non-cubic result are rejected.
    """
    if not code or reps < 1:
        raise GraphError("lcf needs a nonempty code and reps >= 1")
    n = len(code) * reps
    if n < 3:
        raise GraphError("lcf graph needs at least 3 vertices")
    cyc = {(i, (i + 1) % n) if i + 1 < n else (0, n - 1) for i in range(n)}
    cyc = {(min(u, v), max(u, v)) for u, v in cyc}
    chords = set()
    for i in range(n):
        j = (i + code[i % len(code)]) % n
        if j == i:
            raise GraphError(f"lcf code gives a loop at vertex {i}")
        e = (min(i, j), max(i, j))
        if e in cyc:
            raise GraphError(f"lcf chord ({e[0]},{e[1]}) duplicates a cycle edge")
        chords.add(e)
    g = Graph(n, sorted(cyc) + sorted(chords))
    if g.regularity() != 3:
        raise GraphError("lcf code does not describe a cubic graph")
    return g


def heawood():
    """The (3,6) cage on 14 vertices, via its LCF code."""
    return lcf([5, -5], 7)


def tutte_coxeter():
    """The (3,8) cage on 30 vertices, via its LCF code."""
    return lcf([-13, -9, 7, -7, 9, 13], 5)


def mcgee():
    """The (3,7) cage on 24 vertices, via its LCF code."""
    return lcf([12, 7, -7], 8)


_FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "moebius_ladder": (moebius_ladder, 1),
    "hypercube": (hypercube, 1),
    "petersen": (petersen, 0),
    "heawood": (heawood, 0),
    "tutte_coxeter": (tutte_coxeter, 0),
    "mcgee": (mcgee, 0),
}


def make_named(family, params=()):
    """Build a named family member, e.g. make_named('hypercube', [3]).

    ``lcf`` takes the chord list plus a repeat count: the last parameter
    is reps, the rest is the code.  The two-vertex cubic multigraph is
    not constructible here (parallel edges); use subdivide_and_match with
    the "g2" tag instead.
    """
    params = list(params)
    if family in ("g2", "two_vertex_cubic"):
        raise GraphError(
            "the two-vertex cubic graph has parallel edges and is not a "
            "simple Graph; pass the 'g2' tag to subdivide_and_match instead")
    if family == "lcf":
        if len(params) < 2:
            raise GraphError("lcf needs a code and a repeat count")
        return lcf(params[:-1], params[-1])
    if family not in _FAMILIES:
        raise GraphError(f"unknown family {family!r}")
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} parameter(s)")
    return fn(*params)
