"""Independent brute-force oracles used to pin expected values.

Nothing here shares algorithms with the package: tree counts come from
deletion-contraction or direct subset enumeration, girths from cycle
subsets or permutation search, diameters from Floyd-Warshall, cut
constants from direct subset iteration with Fraction arithmetic, and
characteristic polynomials from exact Faddeev-LeVerrier.
"""

from fractions import Fraction
from itertools import combinations

from extremal_graphs.graphs import Graph


def spanning_trees_delcon(n, edges):
    """Deletion-contraction spanning tree count (handles multi-edges)."""
    if n == 1:
        return 1
    if len(edges) < n - 1:
        return 0
    u, v = edges[0]
    rest = edges[1:]
    deleted = spanning_trees_delcon(n, rest)
    # contract v into u, relabel the last vertex to v's slot
    contracted = []
    for a, b in rest:
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            contracted.append((a2 if a2 < v else a2 - 1, b2 if b2 < v else b2 - 1))
    return deleted + spanning_trees_delcon(n - 1, contracted)


def spanning_trees_subsets(g):
    """Count spanning trees by checking every (n-1)-edge subset."""
    n = g.n
    count = 0
    for subset in combinations(range(g.m), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for j in subset:
            u, v = g.edges[j]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            count += 1
    return count


def weighted_tree_polynomial(g, weights):
    """Sum over spanning trees of the product of edge weights (exact)."""
    total = Fraction(0)
    for subset in combinations(range(g.m), g.n - 1):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for j in subset:
            u, v = g.edges[j]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            prod = Fraction(1)
            for j in subset:
                prod *= weights[j]
            total += prod
    return total


def all_simple_cycles_edge_subsets(g):
    """Every vertex-simple cycle as a frozenset of edge indices (m <= 20)."""
    cycles = []
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.m), size):
            deg = {}
            for j in subset:
                u, v = g.edges[j]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            # connected on its support?
            verts = list(deg)
            adj = {x: [] for x in verts}
            for j in subset:
                u, v = g.edges[j]
                adj[u].append(v)
                adj[v].append(u)
            seen = {verts[0]}
            stack = [verts[0]]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == len(verts):
                cycles.append(frozenset(subset))
    return cycles


def girth_by_cycle_subsets(g, weights=None):
    """(girth, systole edge sets) from exhaustive cycle enumeration."""
    cycles = all_simple_cycles_edge_subsets(g)
    if not cycles:
        return None, []
    if weights is None:
        weights = [Fraction(1)] * g.m
    weight_of = {c: sum(weights[j] for j in c) for c in cycles}
    best = min(weight_of.values())
    return best, sorted(tuple(sorted(c)) for c in cycles if weight_of[c] == best)


def girth_unweighted_perms(g):
    """Unweighted girth via shortest cycle search over vertex subsets."""
    from itertools import permutations
    for size in range(3, g.n + 1):
        for verts in combinations(range(g.n), size):
            first = verts[0]
            for order in permutations(verts[1:]):
                cyc = (first,) + order
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    return size
    return None


def floyd_warshall(g, weights=None):
    """All-pairs distances with exact Fractions."""
    inf = None
    dist = [[None] * g.n for _ in range(g.n)]
    for v in range(g.n):
        dist[v][v] = Fraction(0)
    if weights is None:
        weights = [Fraction(1)] * g.m
    for j, (u, v) in enumerate(g.edges):
        w = weights[j]
        if dist[u][v] is None or w < dist[u][v]:
            dist[u][v] = dist[v][u] = w
    for k in range(g.n):
        for i in range(g.n):
            if dist[i][k] is None:
                continue
            for j in range(g.n):
                if dist[k][j] is None:
                    continue
                via = dist[i][k] + dist[k][j]
                if dist[i][j] is None or via < dist[i][j]:
                    dist[i][j] = dist[j][i] = via
    return dist


def diameter_oracle(g, weights=None):
    dist = floyd_warshall(g, weights)
    best = Fraction(0)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            assert dist[i][j] is not None, "disconnected"
            best = max(best, dist[i][j])
    return best


def cut_constants_oracle(g, weights=None):
    """(expansion, cheeger) by direct subset iteration with Fractions."""
    if weights is None:
        weights = [Fraction(1)] * g.m
    deg = [Fraction(0)] * g.n
    for j, (u, v) in enumerate(g.edges):
        deg[u] += weights[j]
        deg[v] += weights[j]
    rest = list(range(1, g.n))
    best_c = None
    best_h = None
    for size in range(0, g.n - 1):
        for extra in combinations(rest, size):
            a = {0} | set(extra)
            cut = sum(weights[j] for j, (u, v) in enumerate(g.edges)
                      if (u in a) != (v in a))
            va = sum(deg[x] for x in a)
            vb = sum(deg[x] for x in range(g.n) if x not in a)
            if va == 0 or vb == 0:
                continue
            c = cut / (va * vb)
            h = cut / min(va, vb)
            if best_c is None or c < best_c:
                best_c = c
            if best_h is None or h < best_h:
                best_h = h
    return best_c, best_h


def charpoly_exact(rows):
    """Characteristic polynomial det(xI - A), exact Faddeev-LeVerrier.

    Returns coefficients [1, c_1, ..., c_n] with p(x) = sum c_k x^(n-k).
    """
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    m = [[Fraction(0)] * n for _ in range(n)]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
              for i in range(n)]
        for i in range(n):
            am[i][i] += coeffs[-1]
        m = am
        trace = sum(sum(a[i][t] * m[t][i] for t in range(n)) for i in range(n))
        coeffs.append(-trace / k)
    return coeffs


def poly_from_roots(roots):
    """Coefficients of prod (x - r) for exact rational roots."""
    coeffs = [Fraction(1)]
    for r in roots:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c
            nxt[i + 1] -= c * r
        coeffs = nxt
    return coeffs


def enumerate_graphs_upto_iso(n_max):
    """All graphs on 1..n_max vertices up to isomorphism, by augmentation.

    Uses the package canonical form for deduplication; the class counts
    are asserted against the published sequence in the tests, which
    guards against both collisions and omissions.
    """
    from extremal_graphs.search import canonical_form

    levels = {1: [Graph(1, [])]}
    for n in range(2, n_max + 1):
        seen = {}
        for h in levels[n - 1]:
            for mask in range(1 << (n - 1)):
                edges = list(h.edges) + [
                    (i, n - 1) for i in range(n - 1) if (mask >> i) & 1]
                g = Graph(n, edges)
                key = canonical_form(g)
                if key not in seen:
                    seen[key] = g
        levels[n] = list(seen.values())
    return levels


def random_full_point(g, rng, denom=64):
    """Random interior point of the full weight simplex (exact rationals)."""
    from extremal_graphs.graphs import Domain, WeightPoint

    raw = [Fraction(rng.randint(1, denom), 1) for _ in range(g.m)]
    total = sum(raw)
    weights = [x * g.m / total for x in raw]
    return WeightPoint(g, weights, Domain.FULL)


def random_degree_preserving_point(g, rng, denom=32):
    """Random interior degree-preserving point via the exact kernel basis."""
    from extremal_graphs.extremal import domain_kernel
    from extremal_graphs.graphs import Domain, WeightPoint

    kernel = domain_kernel(g, Domain.DEGREE_PRESERVING)
    weights = [Fraction(1)] * g.m
    for vec in kernel:
        scale = max(abs(x) for x in vec)
        coeff = Fraction(rng.randint(-denom, denom), denom * 4 * max(1, scale * len(kernel)))
        for j, kj in enumerate(vec):
            weights[j] += coeff * kj
    if any(x <= 0 for x in weights):
        return random_degree_preserving_point(g, rng, denom * 2)
    return WeightPoint(g, weights, Domain.DEGREE_PRESERVING)
