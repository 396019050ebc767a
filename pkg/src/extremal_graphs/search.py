"""Greedy edge-insertion search, edge-switch scans, and small-graph
isomorphism via canonical labeling.

The greedy sequence starts from K4 and, at every step, inserts an edge
between the midpoints of the pair of subdivided edges that maximizes the
exact spanning-tree count; tie-breaking takes the candidate whose
canonical form is lexicographically smallest, which makes the whole
trace deterministic and independent of evaluation order.  The canonical
form itself is a refinement-plus-individualization search returning a
byte string, exposed for reuse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exactla import bareiss_det
from .graphs import Graph, GraphError, WeightPoint, emit_graph, insert_edge
from .metric import girth

ISO_VERTEX_CAP = 64


def tau_int(g):
    """Exact unweighted spanning-tree count (fast integer path)."""
    if g.n <= 1:
        return 1 if g.n == 1 else 0
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return bareiss_det([row[1:] for row in lap[1:]])


def girth_int(g):
    """Unweighted girth by BFS from every vertex; None for forests."""
    best = None
    adj = g.adjacency
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            if best is not None and dist[v] * 2 >= best:
                break
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u and parent[u] != v:
                    cyc = dist[v] + dist[u] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

def _refine(adj, colors):
    """Iterated color refinement; color ids are isomorphism-invariant."""
    n = len(adj)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v])))
                for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _leaf_bytes(g, colors):
    n = g.n
    perm = sorted(range(n), key=lambda v: colors[v])
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    bits = bytearray((n * (n - 1) // 2 + 7) // 8)
    for u, v in g.edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        idx = i * (2 * n - i - 1) // 2 + (j - i - 1)
        bits[idx // 8] |= 1 << (idx % 8)
    return bytes(bits)


def canonical_form(g):
    """Canonical byte string: equal iff the graphs are isomorphic.

    Refinement by iterated neighbor-color signatures; when a color class
    stays non-singleton, each of its vertices is individualized in turn
    and the minimum over the resulting leaves is taken.  Practical for
    the sizes this package works at (n <= 64).
    """
    if g.n > ISO_VERTEX_CAP:
        raise GraphError(f"canonical form limited to n <= {ISO_VERTEX_CAP}")
    header = bytes([g.n, g.m])
    if g.n == 0:
        return header
    adj = g.adjacency
    best = None

    def descend(colors):
        nonlocal best
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            leaf = _leaf_bytes(g, colors)
            if best is None or leaf < best:
                best = leaf
            return
        cell = [v for v in range(g.n) if colors[v] == target]
        for v in cell:
            child = list(colors)
            # individualize: give v a fresh color just below its class
            child = [c * 2 for c in child]
            child[v] -= 1
            descend(_refine(adj, child))

    descend(_refine(adj, [0] * g.n))
    return header + best


def isomorphic(g1, g2):
    """Exact isomorphism test (invariant screens, then canonical forms)."""
    if g1.n > ISO_VERTEX_CAP or g2.n > ISO_VERTEX_CAP:
        raise GraphError(f"isomorphism test limited to n <= {ISO_VERTEX_CAP}")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees) != sorted(g2.degrees):
        return False
    if g1.m and girth_int(g1) != girth_int(g2):
        return False
    return canonical_form(g1) == canonical_form(g2)


def is_k_connected_3(g):
    """Brute-force 3-connectivity (delete every vertex pair); n <= 16 use."""
    if g.n < 4:
        return False
    for a in range(g.n):
        for b in range(a + 1, g.n):
            keep = [v for v in range(g.n) if v not in (a, b)]
            idx = {v: i for i, v in enumerate(keep)}
            edges = [(idx[u], idx[v]) for u, v in g.edges
                     if u not in (a, b) and v not in (a, b)]
            if not Graph(len(keep), edges).is_connected():
                return False
    return True


# ---------------------------------------------------------------------------
# greedy edge-insertion sequence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GreedyStep:
    graph: Graph
    inserted: tuple | None   # (e1, e2) edge indices into the previous graph
    tau: int
    girth: int
    candidate_count: int
    tie_count: int           # candidates sharing the maximal tau
    tie_classes: int         # distinct canonical forms among them


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple

    @property
    def final_graph(self):
        return self.steps[-1].graph

    def tie_events(self):
        return [(s.graph.n, s.tie_count, s.tie_classes)
                for s in self.steps if s.tie_count > 1]

    def to_jsonl(self):
        lines = []
        for s in self.steps:
            lines.append(json.dumps({
                "n": s.graph.n,
                "inserted": list(s.inserted) if s.inserted else None,
                "tau": str(s.tau),
                "girth": s.girth,
                "candidates": s.candidate_count,
                "tie_count": s.tie_count,
                "tie_classes": s.tie_classes,
                "graph": emit_graph(s.graph),
            }))
        return "\n".join(lines) + "\n"


def _evaluate_candidates(g, pairs):
    return [(tau_int(insert_edge(g, e1, e2)), (e1, e2)) for e1, e2 in pairs]


def greedy_sequence(start=None, target_n=30, jobs=1):
    """Grow a cubic graph from K4 by tree-count-maximizing edge insertion.

    Every unordered pair of distinct edges is a candidate; tau is exact,
    ties go to the lexicographically smallest canonical form (logged), so
    two runs agree byte for byte regardless of ``jobs``.
    """
    if start is None:
        from .families import complete
        start = complete(4)
    if start.regularity() != 3 or not start.is_connected():
        raise GraphError("greedy sequence starts from a connected cubic graph")
    if target_n < start.n or target_n % 2 != 0:
        raise GraphError("target vertex count must be even and >= start")

    g = start
    steps = [GreedyStep(graph=g, inserted=None, tau=tau_int(g),
                        girth=girth_int(g), candidate_count=0,
                        tie_count=1, tie_classes=1)]
    while g.n < target_n:
        pairs = [(i, j) for i in range(g.m) for j in range(i + 1, g.m)]
        if jobs > 1:
            from concurrent.futures import ProcessPoolExecutor
            chunk = max(1, len(pairs) // (jobs * 4))
            chunks = [pairs[i:i + chunk] for i in range(0, len(pairs), chunk)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = []
                for part in pool.map(_evaluate_candidates, [g] * len(chunks), chunks):
                    results.extend(part)
        else:
            results = _evaluate_candidates(g, pairs)
        best_tau = max(t for t, _ in results)
        tied = [pair for t, pair in results if t == best_tau]
        if len(tied) == 1:
            choice = tied[0]
            classes = 1
        else:
            forms = sorted((canonical_form(insert_edge(g, *pair)), pair)
                           for pair in tied)
            classes = len({f for f, _ in forms})
            choice = forms[0][1]
        g = insert_edge(g, *choice)
        steps.append(GreedyStep(
            graph=g, inserted=choice, tau=best_tau, girth=girth_int(g),
            candidate_count=len(pairs), tie_count=len(tied),
            tie_classes=classes))
    return GreedyTrace(steps=tuple(steps))


def edge_switch_scan(g):
    """Best tree-count-increasing edge switch, scanning all valid ones.

    Both orientations of every vertex-disjoint edge pair are tried;
    switches that disconnect the graph or would duplicate an edge are
    skipped.  Ties go to the lexicographically smallest switch.
    """
    if not g.is_connected():
        raise GraphError("switch scan needs a connected graph")
    before = tau_int(g)
    best = None  # (delta, switch)
    for i in range(g.m):
        u1, u2 = g.edges[i]
        for j in range(i + 1, g.m):
            u3, u4 = g.edges[j]
            if len({u1, u2, u3, u4}) != 4:
                continue
            for a, b in (((u1, u2), (u3, u4)), ((u1, u2), (u4, u3))):
                if g.has_edge(a[0], b[1]) or g.has_edge(b[0], a[1]):
                    continue
                drop = {(min(*a), max(*a)), (min(*b), max(*b))}
                edges = [e for e in g.edges if e not in drop]
                edges += [(a[0], b[1]), (b[0], a[1])]
                h = Graph(g.n, edges)
                after = tau_int(h)
                if after == 0:
                    continue  # disconnecting switch
                delta = after - before
                key = (a, b)
                if best is None or delta > best[0] or (delta == best[0] and key < best[1]):
                    best = (delta, key)
    if best is None:
        return {"best_switch": None, "delta_tau": 0, "improving": False}
    return {"best_switch": best[1], "delta_tau": best[0],
            "improving": best[0] > 0}
