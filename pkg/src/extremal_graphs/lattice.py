"""Graph Jacobians (critical groups) and flow-lattice minimal norms.

The Jacobian of a connected graph is computed as the cokernel of the
reduced Laplacian: its invariant factors come from an exact Smith normal
form, their product is the tree number, and the normalized minimal norm
of the flow lattice combines the girth with a tree-number power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactla import smith_normal_form
from .graphs import GraphError, WeightPoint
from .metric import girth
from .spectral import tree_number


@dataclass(frozen=True)
class JacobianReport:
    invariant_factors: tuple     # nontrivial factors d_1 | d_2 | ...
    group_order: int             # = tau(G)
    lattice_dimension: int       # kn/2 - n + 1 for k-regular, else m - n + 1
    unnormalized_min_norm: int   # = girth
    normalized_min_norm: float | None  # regular graphs only

    def to_json_dict(self):
        return {
            "invariant_factors": list(self.invariant_factors),
            "group_order": str(self.group_order),
            "lattice_dimension": self.lattice_dimension,
            "unnormalized_min_norm": self.unnormalized_min_norm,
            "normalized_min_norm": self.normalized_min_norm,
        }


def jacobian(g):
    """Invariant factors, group order, and minimal norms for a connected graph.

    The normalized norm gamma * tau^(2/dim) uses the regular-graph
    dimension kn/2 - n + 1 and is omitted for irregular graphs, where the
    dimension is reported as m - n + 1 instead.
    """
    if not g.is_connected():
        raise GraphError("jacobian needs a connected graph")
    if g.n < 2:
        raise GraphError("jacobian needs at least 2 vertices")
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    reduced = [row[1:] for row in lap[1:]]
    diag = smith_normal_form(reduced)
    factors = tuple(d for d in diag if d > 1)
    order = 1
    for d in diag:
        order *= d
    tau = int(tree_number(WeightPoint.unit(g), with_derivatives=False).tau)
    if order != tau:
        raise AssertionError("Smith normal form disagrees with the tree number")

    gam = int(girth(WeightPoint.unit(g)).girth)
    k = g.regularity()
    if k is not None:
        dim = k * g.n // 2 - g.n + 1
        nu = gam * tau ** (2.0 / dim) if dim > 0 else None
    else:
        dim = g.m - g.n + 1
        nu = None
    return JacobianReport(
        invariant_factors=factors, group_order=order, lattice_dimension=dim,
        unnormalized_min_norm=gam, normalized_min_norm=nu)


def minimal_norm_growth_scan(graphs):
    """Tabulate (n, nu, log_{k-1} n) for a family of k-regular graphs.

    Purely observational: the logarithmic growth statement is asymptotic,
    so nothing is asserted beyond shared valency.  Cycles (k = 2) are
    rejected because the lattice dimension degenerates to 1.
    """
    graphs = list(graphs)
    if not graphs:
        return []
    ks = {g.regularity() for g in graphs}
    if None in ks or len(ks) != 1:
        raise GraphError("growth scan needs graphs of one common valency")
    k = ks.pop()
    if k < 3:
        raise GraphError("growth scan needs k >= 3 (dimension degenerates)")
    rows = []
    for g in graphs:
        rep = jacobian(g)
        rows.append((g.n, rep.normalized_min_norm, math.log(g.n, k - 1)))
    return rows


def growth_scan_csv(rows):
    out = ["n,nu,log_base_km1_n"]
    for n, nu, ln in rows:
        out.append(f"{n},{nu},{ln}")
    return "\n".join(out) + "\n"
