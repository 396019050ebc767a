"""Weighted girth, diameter, and brute-force cut constants.

Lengths are exact rationals.  Systoles (shortest cycles) and meridians
(diameter-realizing shortest paths) are enumerated completely, capped at
ENUMERATION_CAP; cut constants scan every bipartition, so they are
restricted to n <= 24.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .graphs import Graph, GraphError, WeightPoint

ENUMERATION_CAP = 10**6
CUT_VERTEX_CAP = 24


@dataclass(frozen=True)
class CycleSet:
    """Girth plus every shortest cycle as a sorted tuple of edge indices."""

    girth: Fraction
    systoles: tuple  # tuples of edge indices
    edge_cycle_incidence: tuple  # m x r, 0/1 rows

    @property
    def count(self):
        return len(self.systoles)

    def to_json_dict(self):
        return {
            "girth": str(self.girth),
            "systoles": [list(s) for s in self.systoles],
        }


@dataclass(frozen=True)
class MeridianSet:
    """Diameter, the diametral pairs, and every meridian path."""

    diameter: Fraction
    diametral_pairs: tuple
    meridians: tuple  # tuples of edge indices (path order)
    edge_meridian_incidence: tuple

    @property
    def count(self):
        return len(self.meridians)

    def to_json_dict(self):
        return {
            "diameter": str(self.diameter),
            "diametral_pairs": [list(p) for p in self.diametral_pairs],
            "meridians": [list(p) for p in self.meridians],
        }


@dataclass(frozen=True)
class CutReport:
    """Exact expansion and Cheeger minima with every attaining bipartition.

    Volumes are weighted-degree sums.  ``expansion_cuts`` and
    ``cheeger_cuts`` list (A, B, cut_weight, vol_A, vol_B) with A the side
    containing vertex 0.
    """

    expansion: Fraction
    cheeger: Fraction
    expansion_cuts: tuple
    cheeger_cuts: tuple

    def to_json_dict(self):
        def cuts(cs):
            return [{"A": list(a), "B": list(b), "cut_weight": str(cw),
                     "vol_A": str(va), "vol_B": str(vb)}
                    for a, b, cw, va, vb in cs]
        return {
            "expansion_constant": str(self.expansion),
            "cheeger_constant": str(self.cheeger),
            "expansion_cuts": cuts(self.expansion_cuts),
            "cheeger_cuts": cuts(self.cheeger_cuts),
        }


def _active_adjacency(w, exclude_zero):
    """(neighbor, edge index, weight) lists, optionally dropping 0-weight edges."""
    g = w.graph
    adj = [[] for _ in range(g.n)]
    for j, ((u, v), x) in enumerate(zip(g.edges, w.weights)):
        if exclude_zero and x == 0:
            continue
        adj[u].append((v, j, x))
        adj[v].append((u, j, x))
    return adj


def _dijkstra(adj, source, n, allowed=None, skip_edge=None):
    """Exact-rational Dijkstra; ``allowed`` restricts the vertex set."""
    dist = {source: Fraction(0)}
    heap = [(Fraction(0), source)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for u, j, x in adj[v]:
            if j == skip_edge:
                continue
            if allowed is not None and u not in allowed:
                continue
            nd = d + x
            if u not in dist or nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def girth(w, exclude_zero=False):
    """Exact girth and the complete list of systoles.

    Cycles are vertex-simple.  By default zero-weight edges participate
    (weight 0); pass exclude_zero=True for the strict-interior view.
    Raises on forests and past the enumeration cap.
    """
    g = w.graph
    adj = _active_adjacency(w, exclude_zero)

    # minimum cycle weight: per edge, shortest path between its endpoints
    # avoiding the edge itself
    best = None
    for j, (u, v) in enumerate(g.edges):
        if exclude_zero and w.weights[j] == 0:
            continue
        dist = _dijkstra(adj, u, g.n, skip_edge=j)
        if v in dist:
            cand = dist[v] + w.weights[j]
            if best is None or cand < best:
                best = cand
    if best is None:
        raise GraphError("graph has no cycle (forest)")
    gamma = best

    # enumerate all vertex-simple cycles of weight exactly gamma; each
    # cycle is rooted at its smallest vertex, orientation fixed by
    # second-vertex < last-vertex
    systoles = []
    for root in range(g.n):
        allowed = set(range(root, g.n))
        back = _dijkstra(adj, root, g.n, allowed=allowed)

        def extend(v, path_vertices, path_edges, weight):
            for u, j, x in adj[v]:
                if u == root and len(path_vertices) >= 3 and j != path_edges[0]:
                    if weight + x == gamma and path_vertices[1] < path_vertices[-1]:
                        systoles.append(tuple(sorted(path_edges + [j])))
                        if len(systoles) > ENUMERATION_CAP:
                            raise GraphError("systole enumeration cap exceeded")
                elif u > root and u not in path_vertices:
                    nw = weight + x
                    if u in back and nw + back[u] <= gamma:
                        path_vertices.append(u)
                        path_edges.append(j)
                        extend(u, path_vertices, path_edges, nw)
                        path_vertices.pop()
                        path_edges.pop()

        extend(root, [root], [], Fraction(0))

    systoles = sorted(set(systoles))
    incidence = tuple(
        tuple(1 if j in set(s) else 0 for s in systoles) for j in range(g.m))
    return CycleSet(girth=gamma, systoles=tuple(systoles),
                    edge_cycle_incidence=incidence)


def diameter(w, exclude_zero=False):
    """Exact diameter, diametral pairs, and all meridians between them."""
    g = w.graph
    adj = _active_adjacency(w, exclude_zero)
    dists = []
    for s in range(g.n):
        d = _dijkstra(adj, s, g.n)
        if len(d) != g.n:
            raise GraphError("graph is disconnected")
        dists.append(d)

    diam = Fraction(0)
    pairs = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            d = dists[u][v]
            if d > diam:
                diam = d
                pairs = [(u, v)]
            elif d == diam:
                pairs.append((u, v))
    if diam == 0:
        raise GraphError("diameter is 0 (single vertex)")

    meridians = []
    for u, v in pairs:
        dv = dists[v]

        def extend(a, acc_weight, path_edges, visited):
            if a == v:
                meridians.append(tuple(path_edges))
                if len(meridians) > ENUMERATION_CAP:
                    raise GraphError("meridian enumeration cap exceeded")
                return
            for b, j, x in adj[a]:
                if b not in visited and acc_weight + x + dv[b] == diam:
                    visited.add(b)
                    path_edges.append(j)
                    extend(b, acc_weight + x, path_edges, visited)
                    path_edges.pop()
                    visited.remove(b)

        extend(u, Fraction(0), [], {u})

    incidence = tuple(
        tuple(1 if j in set(p) else 0 for p in meridians) for j in range(g.m))
    return MeridianSet(diameter=diam, diametral_pairs=tuple(pairs),
                       meridians=tuple(meridians), edge_meridian_incidence=incidence)


def cut_constants(w):
    """Exact expansion and Cheeger constants by scanning all bipartitions.

    Walks the 2^(n-1) - 1 splits with vertex 0 pinned to side A in Gray
    code order, updating the cut weight and volume incrementally with
    cleared-denominator integers.  Every attaining cut is reported,
    sorted by the vertex set of its A side.
    """
    g = w.graph
    n = g.n
    if n > CUT_VERTEX_CAP:
        raise GraphError(f"cut scan limited to n <= {CUT_VERTEX_CAP}")
    if n < 2:
        raise GraphError("cut constants need at least 2 vertices")
    if not g.is_connected():
        raise GraphError("cut constants need a connected graph")

    den = lcm(*(x.denominator for x in w.weights)) if w.weights else 1
    wi = [int(x * den) for x in w.weights]
    deg = [0] * n
    for j, (u, v) in enumerate(g.edges):
        deg[u] += wi[j]
        deg[v] += wi[j]
    total = sum(deg)
    # per vertex: (edge index, other endpoint)
    inc = []
    for v0 in range(n):
        lst = []
        for j in g.incident_edges[v0]:
            u, v = g.edges[j]
            lst.append((j, v if u == v0 else u))
        inc.append(lst)

    in_b = [False] * n
    cut = 0
    vol_b = 0
    best_c = None
    best_h = None
    c_cuts = []
    h_cuts = []

    def snapshot():
        a = tuple(i for i in range(n) if not in_b[i])
        b = tuple(i for i in range(n) if in_b[i])
        return a, b

    prev = 0
    for mask in range(1, 1 << (n - 1)):
        gray = mask ^ (mask >> 1)
        diff = gray ^ prev
        prev = gray
        v0 = diff.bit_length()  # flipped vertex (1-based bit -> vertex id)
        entering = bool(gray & diff)
        in_b[v0] = entering
        vol_b += deg[v0] if entering else -deg[v0]
        for j, other in inc[v0]:
            # edge is crossing after the flip iff the endpoints now disagree
            cut += wi[j] * (1 if in_b[other] != entering else -1)
        if vol_b == 0 or vol_b == total:
            continue
        vol_a = total - vol_b
        c_val = Fraction(cut * den, vol_a * vol_b)
        h_val = Fraction(cut, min(vol_a, vol_b))
        if best_c is None or c_val < best_c:
            best_c = c_val
            c_cuts = [snapshot()]
        elif c_val == best_c:
            c_cuts.append(snapshot())
        if best_h is None or h_val < best_h:
            best_h = h_val
            h_cuts = [snapshot()]
        elif h_val == best_h:
            h_cuts.append(snapshot())

    def finalize(cut_list):
        out = []
        for a, b in sorted(set(cut_list)):
            cw = sum(w.weights[j] for j, (u, v) in enumerate(g.edges)
                     if (u in set(a)) != (v in set(a)))
            va = sum(w.weighted_degree(x) for x in a)
            vb = sum(w.weighted_degree(x) for x in b)
            out.append((a, b, cw, va, vb))
        return tuple(out)

    return CutReport(expansion=best_c, cheeger=best_h,
                     expansion_cuts=finalize(c_cuts),
                     cheeger_cuts=finalize(h_cuts))
