"""Laplacians, spectra, and exact spanning-tree counts.

Tree numbers come in three routes that must agree: the (1,1) cofactor of
the Laplacian (exact, fraction-free), the all-ones-shifted determinant
det(J+L)/n^2 (exact), and the eigenvalue product (floating point, used
as a consistency check).  Per-edge tree derivatives and effective
resistances are exact rationals throughout.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .exactla import bareiss_det
from .graphs import Graph, GraphError, WeightPoint

#: gap below which eigenvalues are grouped into one multiplicity cluster
CLUSTER_TOL = 1e-7


class TreeMethod(enum.Enum):
    COFACTOR = "cofactor"
    TEMPERLEY = "temperley"
    SPECTRAL = "spectral"


@dataclass(frozen=True)
class TreeReport:
    """Tree number tau, its per-edge derivatives, and tau_j / tau."""

    tau: Fraction
    per_edge_tau: tuple | None
    resistances: tuple | None  # None when tau = 0 (disconnected support)
    method: TreeMethod

    def to_json_dict(self):
        return {
            "tau": str(self.tau),
            "per_edge_tau": None if self.per_edge_tau is None
            else [str(t) for t in self.per_edge_tau],
            "effective_resistances": None if self.resistances is None
            else [str(r) for r in self.resistances],
            "method": self.method.value,
        }


@dataclass(frozen=True)
class SpectrumReport:
    """Adjacency and Laplacian eigenvalues with clustered multiplicities."""

    adjacency_eigenvalues: tuple     # descending
    laplacian_eigenvalues: tuple     # ascending
    laplacian_eigenvectors: np.ndarray  # orthonormal columns, sorted as above
    adjacency_clusters: tuple        # (value, multiplicity) pairs
    laplacian_clusters: tuple

    def to_json_dict(self):
        return {
            "adjacency_eigenvalues": list(self.adjacency_eigenvalues),
            "laplacian_eigenvalues": list(self.laplacian_eigenvalues),
            "adjacency_clusters": [list(c) for c in self.adjacency_clusters],
            "laplacian_clusters": [list(c) for c in self.laplacian_clusters],
        }


def laplacian(w):
    """Weighted Laplacian as a nested list of Fractions (rows sum to 0)."""
    g = w.graph
    lap = [[Fraction(0)] * g.n for _ in range(g.n)]
    for (u, v), x in zip(g.edges, w.weights):
        lap[u][u] += x
        lap[v][v] += x
        lap[u][v] -= x
        lap[v][u] -= x
    return lap


def adjacency_matrix(w):
    g = w.graph
    a = [[Fraction(0)] * g.n for _ in range(g.n)]
    for (u, v), x in zip(g.edges, w.weights):
        a[u][v] = x
        a[v][u] = x
    return a


def laplacian_float(w):
    return np.array([[float(x) for x in row] for row in laplacian(w)])


def _cluster(values, tol):
    groups = []
    for v in values:
        if groups and abs(v - groups[-1][-1]) <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple((float(np.mean(grp)), len(grp)) for grp in groups)


def spectrum(w, eigentol=1e-10):
    """Eigen-decomposition of adjacency and Laplacian with residual checks.

    Residuals ||Lv - mu v|| are verified against eigentol * ||L||; the
    clustering tolerance for multiplicities is CLUSTER_TOL.
    """
    if eigentol <= 0:
        raise GraphError("eigentol must be positive")
    lap = laplacian_float(w)
    adj = np.array([[float(x) for x in row] for row in adjacency_matrix(w)])
    mu, vecs = np.linalg.eigh(lap)
    lam = np.linalg.eigvalsh(adj)[::-1]
    scale = max(np.abs(mu).max(), 1.0)
    resid = np.linalg.norm(lap @ vecs - vecs * mu, axis=0)
    if np.any(resid > eigentol * scale * 10):
        raise GraphError("eigen-solve residual exceeded tolerance")
    return SpectrumReport(
        adjacency_eigenvalues=tuple(float(x) for x in lam),
        laplacian_eigenvalues=tuple(float(x) for x in mu),
        laplacian_eigenvectors=vecs,
        adjacency_clusters=_cluster(list(lam), CLUSTER_TOL),
        laplacian_clusters=_cluster(list(mu), CLUSTER_TOL),
    )


def _int_laplacian(w):
    """Clear denominators: returns (integer laplacian rows, denominator)."""
    g = w.graph
    den = lcm(*(x.denominator for x in w.weights)) if w.weights else 1
    lap = [[0] * g.n for _ in range(g.n)]
    for (u, v), x in zip(g.edges, w.weights):
        xi = int(x * den)
        lap[u][u] += xi
        lap[v][v] += xi
        lap[u][v] -= xi
        lap[v][u] -= xi
    return lap, den


def _cofactor_tau(w):
    g = w.graph
    if g.n == 0:
        return Fraction(0)
    if g.n == 1:
        return Fraction(1)
    lap, den = _int_laplacian(w)
    minor = [row[1:] for row in lap[1:]]
    return Fraction(bareiss_det(minor), den ** (g.n - 1))


def _tau_with_bumped_edge(w, j):
    """tau with x_j replaced by x_j + 1 (one extra exact determinant)."""
    g = w.graph
    lap, den = _int_laplacian(w)
    u, v = g.edges[j]
    lap[u][u] += den
    lap[v][v] += den
    lap[u][v] -= den
    lap[v][u] -= den
    minor = [row[1:] for row in lap[1:]]
    return Fraction(bareiss_det(minor), den ** (g.n - 1))


def _temperley_tau(w):
    g = w.graph
    if g.n == 0:
        return Fraction(0)
    lap, den = _int_laplacian(w)
    jl = [[lap[i][k] + den for k in range(g.n)] for i in range(g.n)]
    return Fraction(bareiss_det(jl), den**g.n * g.n**2)


def tree_number(w, method=TreeMethod.COFACTOR, with_derivatives=True):
    """Weighted spanning-tree count of a WeightPoint.

    COFACTOR and TEMPERLEY are exact; SPECTRAL returns a float tau with no
    derivatives.  Disconnected positive-weight support gives tau = 0 with
    resistances flagged as None (not an exception).  Because tau is
    multilinear in the weights, the per-edge derivative tau_j equals
    tau(x with x_j+1) - tau(x).
    """
    g = w.graph
    if method is TreeMethod.SPECTRAL:
        mu = np.linalg.eigvalsh(laplacian_float(w))
        tau = float(np.prod(mu[1:]) / g.n) if g.n > 1 else 1.0
        return TreeReport(tau=tau, per_edge_tau=None, resistances=None, method=method)

    tau = _cofactor_tau(w) if method is TreeMethod.COFACTOR else _temperley_tau(w)
    if not with_derivatives:
        return TreeReport(tau=tau, per_edge_tau=None, resistances=None, method=method)
    per_edge = tuple(_tau_with_bumped_edge(w, j) - tau for j in range(g.m))
    if tau > 0:
        res = tuple(t / tau for t in per_edge)
    else:
        res = None
    return TreeReport(tau=tau, per_edge_tau=per_edge, resistances=res, method=method)


def effective_resistances(w):
    """The vector tau_j / tau; requires a connected positive-weight support."""
    rep = tree_number(w, TreeMethod.COFACTOR)
    if rep.tau == 0:
        raise GraphError("tau = 0: effective resistances undefined")
    return rep.resistances


def resistances_float(w):
    """Effective resistances via the Laplacian pseudo-inverse (float route).

    Independent of the cofactor-derivative route; the two must agree to
    high precision on every connected input.
    """
    g = w.graph
    lp = np.linalg.pinv(laplacian_float(w))
    out = []
    for u, v in g.edges:
        out.append(lp[u, u] + lp[v, v] - 2 * lp[u, v])
    return np.array(out)


def equiarboreal_test(g):
    """Per-edge spanning-tree counts and the equal-count / divisibility verdicts.

    A connected unweighted graph is equiarboreal when every edge lies in
    the same number of spanning trees; a necessary condition is that m
    divides (n-1) * tau.
    """
    if not g.is_connected():
        raise GraphError("equiarboreal test needs a connected graph")
    rep = tree_number(WeightPoint.unit(g))
    counts = tuple(int(t) for t in rep.per_edge_tau)
    tau = int(rep.tau)
    return {
        "is_equiarboreal": len(set(counts)) <= 1,
        "per_edge_tree_counts": counts,
        "tau": tau,
        "divisibility_ok": ((g.n - 1) * tau) % g.m == 0 if g.m else True,
    }


def moore_bound(k, g):
    """Minimum vertex count f_0(k, g) of a k-regular graph of girth g.

    Exact integer arithmetic via geometric sums; k = 2 is rejected (the
    closed form divides by k - 2).
    """
    if k < 3:
        raise GraphError("moore bound needs k >= 3")
    if g < 3:
        raise GraphError("moore bound needs girth g >= 3")
    if g % 2 == 1:
        return 1 + k * sum((k - 1) ** i for i in range((g - 1) // 2))
    return 2 * sum((k - 1) ** i for i in range(g // 2))


def mckay_sigma(k):
    """The growth constant (k-1)^(k-1) / (k(k-2))^(k/2-1).

    For even k the power is integral, so the value is computed as an
    exact rational before conversion; sigma_4 is exactly 27/8 = 3.375.
    """
    if k < 3:
        raise GraphError("sigma_k needs k >= 3")
    if k % 2 == 0:
        return float(Fraction((k - 1) ** (k - 1), (k * (k - 2)) ** (k // 2 - 1)))
    return (k - 1) ** (k - 1) / math.pow(k * (k - 2), k / 2 - 1)


def is_ramanujan(g, eigentol=1e-9):
    """Whether all nontrivial adjacency eigenvalues lie in [-2 sqrt(k-1), 2 sqrt(k-1)].

    Eigenvalues equal to +-k (the trivial ones) are excluded from the
    test.  Requires a connected regular graph.
    """
    k = g.regularity()
    if k is None:
        raise GraphError("ramanujan test needs a regular graph")
    if not g.is_connected():
        raise GraphError("ramanujan test needs a connected graph")
    rep = spectrum(WeightPoint.unit(g))
    bound = 2 * math.sqrt(k - 1)
    offending = [
        lam for lam in rep.adjacency_eigenvalues
        if abs(abs(lam) - k) > eigentol and abs(lam) > bound + eigentol
    ]
    return {"verdict": not offending, "offending_eigenvalues": offending}
