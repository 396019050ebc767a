"""Extremality certificates and optimizers over the edge-weight polytopes.

Four questions are decided at the unweighted point: is it a local
maximum for girth, a local minimum for diameter, and a local maximum for
the expansion / Cheeger constants over degree-preserving weightings?
Each answer is a certificate: either exact nonnegative cone coefficients
expressing the all-ones vector in the systole / meridian / cut cone, or
an exact improving direction whose effect is re-verified by recomputing
the objective at a concrete nearby point.

The module also ascends the (log-concave) weighted tree number to its
interior maximum, and implements the first-order eigenvalue criticality
test for Laplacian eigenvalues together with the structure theorem for
graphs carrying an eigenvector with constant edge increments.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import metric
from .exactla import nullspace_int
from .graphs import Domain, Graph, GraphError, WeightPoint, edge_switch
from .lp import solve_eq_feasibility
from .spectral import (laplacian_float, resistances_float, spectrum,
                       tree_number, TreeMethod)


class Verdict(enum.Enum):
    LOCAL_EXTREMUM = "local_extremum"
    NOT_EXTREMUM = "not_extremum"


class Objective(enum.Enum):
    GIRTH_MAX = "girth_max"
    DIAM_MIN = "diameter_min"
    EXPANSION_MAX = "expansion_max"
    CHEEGER_MAX = "cheeger_max"


@dataclass(frozen=True)
class ExtremalCertificate:
    """Outcome of a first-order extremality test at an interior point.

    ``cone_coefficients`` reproduces the all-ones vector exactly when the
    verdict is LOCAL_EXTREMUM; otherwise ``direction`` is a rational
    perturbation with zero coordinate sum (zero weighted-degree change
    for the cut objectives) that strictly improves the objective, checked
    by exact recomputation at ``epsilon``.
    """

    objective: Objective
    verdict: Verdict
    cone_coefficients: tuple | None
    vertex_multipliers: tuple | None  # cut objectives only
    direction: tuple | None
    epsilon: Fraction | None
    value_before: Fraction
    value_after: Fraction | None

    def to_json_dict(self):
        return {
            "objective": self.objective.value,
            "verdict": self.verdict.value,
            "cone_coefficients": None if self.cone_coefficients is None
            else [str(c) for c in self.cone_coefficients],
            "vertex_multipliers": None if self.vertex_multipliers is None
            else [str(d) for d in self.vertex_multipliers],
            "direction": None if self.direction is None
            else [str(y) for y in self.direction],
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "value_before": str(self.value_before),
            "value_after": None if self.value_after is None else str(self.value_after),
        }


def _require_interior(w):
    if not w.is_interior:
        raise GraphError("certificate requires an interior weight point")


def _balanced_direction(z, m):
    """Shift a separating vector onto the sum-zero hyperplane.

    Given z with z . column >= 0 for every incidence column and
    z . omega < 0, the shifted y = z - (sum(z)/m) omega satisfies
    omega . y = 0 and strictly positive products with every column
    (each column is a nonzero 0/1 vector).
    """
    shift = Fraction(sum(z), m)
    return tuple(Fraction(zi) - shift for zi in z)


def _verify_direction(w, direction, objective_fn, improves, start_eps=Fraction(1, 1024)):
    """Find a rational epsilon at which the recomputed objective strictly improves."""
    base = objective_fn(w)
    eps = Fraction(start_eps)
    for _ in range(24):
        trial = [x + eps * y for x, y in zip(w.weights, direction)]
        if all(t > 0 for t in trial):
            moved = objective_fn(WeightPoint(w.graph, trial, w.domain))
            if improves(moved, base):
                return eps, base, moved
        eps /= 2
    raise GraphError("could not verify improving direction at any epsilon")


def _cone_certificate(w, columns, objective, objective_fn, improves):
    """Shared girth/diameter logic: omega in cone(columns) or improving y."""
    m = w.graph.m
    a_rows = [[Fraction(col[i]) for col in columns] for i in range(m)]
    omega = [Fraction(1)] * m
    res = solve_eq_feasibility(a_rows, omega)
    if res.feasible:
        return ExtremalCertificate(
            objective=objective, verdict=Verdict.LOCAL_EXTREMUM,
            cone_coefficients=res.x, vertex_multipliers=None,
            direction=None, epsilon=None,
            value_before=objective_fn(w), value_after=None)
    y = _balanced_direction(res.certificate, m)
    for col in columns:
        if sum(y[i] for i in range(m) if col[i]) <= 0:
            raise GraphError("separating direction failed strictness check")
    if objective is Objective.DIAM_MIN:
        y = tuple(-v for v in y)
    eps, before, after = _verify_direction(w, y, objective_fn, improves)
    return ExtremalCertificate(
        objective=objective, verdict=Verdict.NOT_EXTREMUM,
        cone_coefficients=None, vertex_multipliers=None,
        direction=y, epsilon=eps, value_before=before, value_after=after)


def certify_girth_max(w):
    """Is w a local maximum of the girth over the weight simplex?

    Tests whether the all-ones vector lies in the nonnegative cone of the
    edge-systole incidence columns; refusals come with a direction along
    which every systole strictly lengthens.  Intended at the unweighted
    point; other interior points are accepted but the systole set can
    jump discontinuously nearby, so read those verdicts as first-order
    statements only.
    """
    _require_interior(w)
    cs = metric.girth(w)
    cols = [[1 if i in set(s) else 0 for i in range(w.graph.m)] for s in cs.systoles]
    return _cone_certificate(
        w, cols, Objective.GIRTH_MAX,
        lambda wp: metric.girth(wp).girth,
        lambda new, old: new > old)


def certify_diameter_min(w):
    """Is w a local minimum of the diameter?  Mirror image of the girth test."""
    _require_interior(w)
    ms = metric.diameter(w)
    cols = [[1 if i in set(p) else 0 for i in range(w.graph.m)] for p in ms.meridians]
    return _cone_certificate(
        w, cols, Objective.DIAM_MIN,
        lambda wp: metric.diameter(wp).diameter,
        lambda new, old: new < old)


class CutKind(enum.Enum):
    EXPANSION = "expansion"
    CHEEGER = "cheeger"


def certify_cut_max(w, which):
    """Local maximality of the expansion or Cheeger constant over P-tilde.

    Requires a degree-preserving interior point (volumes are then
    constant and the cut values are linear in the weights).  Feasibility
    of  E c = N d, c >= 0, sum(c) = 1, d free  over exact rationals is
    the no-improving-direction condition; the infeasibility multipliers
    are exactly a degree-preserving direction raising every minimizing
    cut's value.
    """
    if w.domain is not Domain.DEGREE_PRESERVING:
        raise GraphError("cut certificates require the degree-preserving domain")
    _require_interior(w)
    g = w.graph
    report = metric.cut_constants(w)
    if which is CutKind.EXPANSION:
        cuts = report.expansion_cuts
        objective = Objective.EXPANSION_MAX
        value_fn = lambda wp: metric.cut_constants(wp).expansion
    else:
        cuts = report.cheeger_cuts
        objective = Objective.CHEEGER_MAX
        value_fn = lambda wp: metric.cut_constants(wp).cheeger

    m, n = g.m, g.n
    cols = []
    for a, b, _cw, va, vb in cuts:
        aset = set(a)
        denom = va * vb if which is CutKind.EXPANSION else min(va, vb)
        col = [Fraction(1, 1) / denom if (u in aset) != (v in aset) else Fraction(0)
               for u, v in g.edges]
        cols.append(col)

    # rows: m edge equations E c - N d = 0, then the normalization sum(c) = 1
    r = len(cols)
    a_rows = []
    for i in range(m):
        u, v = g.edges[i]
        row = [cols[j][i] for j in range(r)]
        row += [Fraction(-1) if t in (u, v) else Fraction(0) for t in range(n)]
        a_rows.append(row)
    a_rows.append([Fraction(1)] * r + [Fraction(0)] * n)
    b = [Fraction(0)] * m + [Fraction(1)]
    res = solve_eq_feasibility(a_rows, b, free_cols=range(r, r + n))
    if res.feasible:
        return ExtremalCertificate(
            objective=objective, verdict=Verdict.LOCAL_EXTREMUM,
            cone_coefficients=res.x[:r], vertex_multipliers=res.x[r:],
            direction=None, epsilon=None,
            value_before=value_fn(w), value_after=None)

    y = res.certificate[:m]
    # exact sanity: degree-preserving and strictly raising every listed cut
    for v in range(n):
        if sum(y[j] for j in g.incident_edges[v]) != 0:
            raise GraphError("cut direction is not degree-preserving")
    for col in cols:
        if sum(yi * ci for yi, ci in zip(y, col)) <= 0:
            raise GraphError("cut direction failed strictness check")
    eps, before, after = _verify_direction(
        w, y, value_fn, lambda new, old: new > old)
    return ExtremalCertificate(
        objective=objective, verdict=Verdict.NOT_EXTREMUM,
        cone_coefficients=None, vertex_multipliers=None,
        direction=y, epsilon=eps, value_before=before, value_after=after)


# ---------------------------------------------------------------------------
# tree-number ascent
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AscentResult:
    final_point: WeightPoint
    final_tau: Fraction
    tau_trajectory: tuple
    resistance_spread: Fraction
    converged: bool
    iterations: int


def domain_kernel(g, domain):
    """Integer basis of the tangent space of the domain's affine hull."""
    if domain is Domain.FULL:
        return [[1 if i == j else (-1 if j == 0 else 0) for j in range(g.m)]
                for i in range(1, g.m)]
    rows = [[1 if v in g.edges[j] else 0 for j in range(g.m)] for v in range(g.n)]
    return nullspace_int(rows, g.m)


def _log_tau(g, x):
    lap = np.zeros((g.n, g.n))
    for (u, v), w in zip(g.edges, x):
        lap[u, u] += w
        lap[v, v] += w
        lap[u, v] -= w
        lap[v, u] -= w
    sign, logdet = np.linalg.slogdet(lap[1:, 1:])
    if sign <= 0:
        return -math.inf
    return logdet


def tree_weight_ascent(g, domain=Domain.FULL, start=None, tol=1e-9,
                       max_iter=20000):
    """Projected gradient ascent of log tau over P or P-tilde.

    The gradient of log tau is the effective-resistance vector; it is
    projected onto the domain's tangent space and followed with a
    backtracking line search that keeps all weights positive.  The last
    iterate is rounded onto the domain exactly (dyadic coordinates in an
    integer kernel basis), so the returned WeightPoint satisfies its
    domain constraints as exact rationals.
    """
    if not g.is_connected():
        raise GraphError("ascent needs a connected graph")
    tol = float(tol)
    if start is None:
        x = np.ones(g.m)
    else:
        if not start.is_interior:
            raise GraphError("ascent must start at an interior point")
        if start.domain is not domain:
            raise GraphError("start point lives in a different domain")
        x = np.array([float(v) for v in start.weights])

    kernel = domain_kernel(g, domain)
    kmat = np.array(kernel, dtype=float).T  # m x dim
    # orthogonal projector onto span(kernel)
    q, _ = np.linalg.qr(kmat)
    proj = q @ q.T

    # float resistances straight from the pseudo-inverse
    def resist(xv):
        lap = np.zeros((g.n, g.n))
        for (u, v), wv in zip(g.edges, xv):
            lap[u, u] += wv
            lap[v, v] += wv
            lap[u, v] -= wv
            lap[v, u] -= wv
        lp = np.linalg.pinv(lap)
        return np.array([lp[u, u] + lp[v, v] - 2 * lp[u, v] for u, v in g.edges])

    f = _log_tau(g, x)
    traj = [math.exp(f)]
    step = 1.0
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        d = proj @ resist(x)
        gn = float(np.linalg.norm(d))
        if gn <= tol:
            converged = True
            break
        t = step
        accepted = False
        while t > 1e-18:
            cand = x + t * d
            if cand.min() > 0:
                fc = _log_tau(g, cand)
                if fc >= f + 1e-4 * t * gn * gn:
                    x, f = cand, fc
                    accepted = True
                    break
            t *= 0.5
        if not accepted:
            break
        traj.append(math.exp(f))
        step = min(t * 2.0, 1e6)

    # exact rounding: coordinates in the kernel basis, dyadic denominator 2^40
    t_coords, *_ = np.linalg.lstsq(kmat, x - 1.0, rcond=None)
    scale = 1 << 40
    t_exact = [Fraction(round(c * scale), scale) for c in t_coords]
    weights = [Fraction(1)] * g.m
    for coeff, basis_vec in zip(t_exact, kernel):
        for j, kj in enumerate(basis_vec):
            if kj:
                weights[j] += coeff * kj
    if any(wj <= 0 for wj in weights):
        raise GraphError("rounded ascent iterate left the open polytope")
    final = WeightPoint(g, weights, domain)
    rep = tree_number(final, TreeMethod.COFACTOR)
    spread = max(rep.resistances) - min(rep.resistances)
    return AscentResult(final_point=final, final_tau=rep.tau,
                        tau_trajectory=tuple(traj), resistance_spread=spread,
                        converged=converged, iterations=it)


# ---------------------------------------------------------------------------
# eigenvalue criticality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DirectionForm:
    edge_a: int
    edge_b: int
    adjacent: bool
    form: np.ndarray          # the p x p matrix F
    inertia: tuple            # (negative, zero, positive) counts
    classification: str       # 'zero' | 'indefinite' | 'semidefinite'


@dataclass(frozen=True)
class EigenCriticalityReport:
    eigenvalue: float
    multiplicity: int
    directions: tuple
    verdict: str              # 'CRITICAL' | 'INCREASING_DIRECTION_FOUND'
    increasing_direction: tuple | None
    df_const: dict | None     # simple eigenvalues only
    coefficient_check_error: float
    rank_bound_ok: bool


def _pick_cluster(report, which, tol):
    """Resolve an eigenvalue request to (mean value, eigenvector column indices)."""
    groups = []
    for i, v in enumerate(report.laplacian_eigenvalues):
        if groups and abs(v - report.laplacian_eigenvalues[groups[-1][-1]]) <= 1e-7:
            groups[-1].append(i)
        else:
            groups.append([i])
    means = [sum(report.laplacian_eigenvalues[i] for i in grp) / len(grp)
             for grp in groups]
    if isinstance(which, int) and not isinstance(which, bool):
        if not (0 <= which < len(groups)):
            raise GraphError(f"no eigenvalue cluster with index {which}")
        return means[which], groups[which]
    hits = [i for i, m in enumerate(means) if abs(m - float(which)) <= max(tol, 1e-6)]
    if not hits:
        raise GraphError(f"no eigenvalue cluster near {which}")
    if len(hits) > 1:
        raise GraphError(f"eigenvalue {which} is ambiguous at tolerance")
    return means[hits[0]], groups[hits[0]]


def df_const_check(g, f, tol=1e-9):
    """Does |f(u) - f(v)| take one constant value over all edges?"""
    deltas = [abs(f[u] - f[v]) for u, v in g.edges]
    lo, hi = min(deltas), max(deltas)
    constant = sum(deltas) / len(deltas)
    holds = (hi - lo) <= tol * max(1.0, hi) and constant > tol
    return {"holds": bool(holds), "constant": float(constant),
            "spread": float(hi - lo)}


def eigen_criticality(w, which_eigenvalue, tol=1e-9):
    """First-order criticality of a positive Laplacian eigenvalue at w.

    For each admissible edge-pair direction (disjoint pairs always;
    adjacent pairs too when some edge touches every other edge) the
    restriction of the perturbation to the eigenspace is the rank-<=2
    form F_ab = z_a z_b - w_a w_b built from eigenvector increments
    across the two edges.  The eigenvalue is critical iff every F is
    indefinite or zero.  For a simple eigenvalue the constant-increment
    test on its eigenvector must reach the same verdict.
    """
    g = w.graph
    report = spectrum(w)
    mu, idx = _pick_cluster(report, which_eigenvalue, tol)
    if mu <= tol:
        raise GraphError("criticality test needs a positive eigenvalue")
    basis = report.laplacian_eigenvectors[:, idx]
    p = len(idx)

    edges = g.edges
    pairs = []
    adjacency_counts = [
        sum(1 for f2 in range(g.m) if f2 != e and set(edges[e]) & set(edges[f2]))
        for e in range(g.m)]
    include_adjacent = any(c == g.m - 1 for c in adjacency_counts)
    for a, b in itertools.combinations(range(g.m), 2):
        shared = set(edges[a]) & set(edges[b])
        if not shared:
            pairs.append((a, b, False))
        elif include_adjacent:
            pairs.append((a, b, True))

    # the eigenbasis is orthonormal, so entries of F are O(1); forms whose
    # every entry sits below this absolute floor are exact zeros plus noise
    zero_floor = 1e-10
    directions = []
    worst_coeff_err = 0.0
    rank_ok = True
    increasing = None
    for a, b, adj in pairs:
        u1, v1 = edges[a]
        u2, v2 = edges[b]
        z = basis[u1, :] - basis[v1, :]
        wv = basis[u2, :] - basis[v2, :]
        form = np.outer(z, z) - np.outer(wv, wv)
        scale = float(np.abs(form).max())
        if scale <= zero_floor:
            kind = "zero"
            neg = pos = 0
            zero = p
        else:
            eigs = np.linalg.eigvalsh(form)
            neg = int(np.sum(eigs < -tol * scale))
            pos = int(np.sum(eigs > tol * scale))
            zero = p - neg - pos
            if neg and pos:
                kind = "indefinite"
            elif not neg and not pos:
                kind = "zero"
            else:
                kind = "semidefinite"
                if increasing is None:
                    increasing = (a, b, 1 if pos else -1)
        directions.append(DirectionForm(a, b, adj, form, (neg, zero, pos), kind))
        if p >= 2:
            e2 = (np.trace(form) ** 2 - np.trace(form @ form)) / 2.0
            expected = -sum(
                (z[i] * wv[j] - z[j] * wv[i]) ** 2
                for i in range(p) for j in range(i + 1, p))
            worst_coeff_err = max(worst_coeff_err, abs(e2 - expected))
        if p >= 3 and scale > zero_floor:
            svals = np.linalg.svd(form, compute_uv=False)
            if svals[2] > 1e-9 * svals[0]:
                rank_ok = False

    verdict = "CRITICAL" if increasing is None else "INCREASING_DIRECTION_FOUND"
    dfc = None
    if p == 1:
        dfc = df_const_check(g, basis[:, 0], tol=1e-6)
        dfc["agrees_with_form_test"] = dfc["holds"] == (verdict == "CRITICAL")
    return EigenCriticalityReport(
        eigenvalue=float(mu), multiplicity=p, directions=tuple(directions),
        verdict=verdict, increasing_direction=increasing, df_const=dfc,
        coefficient_check_error=float(worst_coeff_err), rank_bound_ok=rank_ok)


# ---------------------------------------------------------------------------
# the structure theorem for constant-increment eigenvectors
# ---------------------------------------------------------------------------

def _bipartition(g):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adjacency[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def character_check(g, f, mu, tol=1e-9):
    """Verify the structural consequences of a constant-increment eigenvector.

    For a connected k-regular graph with L f = mu f and |f(u)-f(v)|
    constant over edges, the graph must be bipartite, mu = 2 r1 for an
    integer r1 dividing k, each vertex sits on an integer level with
    exactly r1 * j upward neighbors at level j, the vertex count is
    divisible by 2^(k/r1) (with binomial level sizes when r1 = 1), and
    the cube count n0 satisfies n0 >= r1.  Returns one named flag per
    condition plus the overall verdict.
    """
    k = g.regularity()
    if k is None:
        raise GraphError("character check needs a regular graph")
    if not g.is_connected():
        raise GraphError("character check needs a connected graph")
    fv = np.asarray(f, dtype=float)
    lap = laplacian_float(WeightPoint.unit(g))
    resid = float(np.linalg.norm(lap @ fv - mu * fv))
    if resid > tol * max(1.0, float(np.linalg.norm(fv))):
        raise GraphError(f"f is not an eigenvector for {mu} (residual {resid:.2e})")

    deltas = [abs(fv[u] - fv[v]) for u, v in g.edges]
    c = float(np.mean(deltas))
    if max(deltas) - min(deltas) > tol * max(1.0, c) or c <= tol:
        raise GraphError("eigenvector does not have constant edge increments")
    fv = fv / c  # rescale so the constant is 1

    out = {"eigenvalue": float(mu), "degree": k}
    out["bipartite"] = _bipartition(g) is not None

    a = float(fv.max())
    r1 = mu / 2.0
    out["mu_is_even_integer"] = abs(r1 - round(r1)) <= tol and round(r1) >= 1
    r1 = int(round(r1))
    out["top_value_matches"] = abs(a * mu - k) <= 1e-6 * k
    out["r1_divides_k"] = out["mu_is_even_integer"] and k % r1 == 0

    levels = [a - fv[v] for v in range(g.n)]
    out["levels_integral"] = all(abs(l - round(l)) <= 1e-6 for l in levels)
    lev = [int(round(l)) for l in levels]
    n_levels = max(lev) + 1

    out["level_rule"] = True
    if out["levels_integral"] and out["r1_divides_k"]:
        expected_top = k // r1
        out["level_rule"] = (n_levels - 1) == expected_top
        for v in range(g.n):
            j = lev[v]
            up = sum(1 for u in g.adjacency[v] if lev[u] == j - 1)
            down = sum(1 for u in g.adjacency[v] if lev[u] == j + 1)
            if up + down != k or up != r1 * j:
                out["level_rule"] = False
                break

    power = 2 ** (k // r1) if out["r1_divides_k"] else None
    out["vertex_count_divisible"] = power is not None and g.n % power == 0
    n0 = g.n // power if out["vertex_count_divisible"] else None
    out["n0"] = n0
    out["n0_at_least_r1"] = n0 is not None and n0 >= r1

    out["level_sizes"] = tuple(lev.count(j) for j in range(n_levels))
    out["binomial_levels"] = True
    if r1 == 1 and n0 is not None:
        out["binomial_levels"] = all(
            lev.count(j) == n0 * math.comb(k, j) for j in range(n_levels))

    out["passed"] = all(
        out[key] for key in
        ("bipartite", "mu_is_even_integer", "top_value_matches", "r1_divides_k",
         "levels_integral", "level_rule", "vertex_count_divisible",
         "n0_at_least_r1", "binomial_levels"))
    return out


def cube_family(k, n0, switches=()):
    """n0 disjoint k-cubes joined up by level-respecting edge switches.

    Vertex c * 2^k + x is at level popcount(x); the vector
    f(u) = k - 2 level(u) satisfies L f = 2 f exactly (checked in integer
    arithmetic) and survives every switch whose removed edges both run
    between the same pair of consecutive levels.  Returns the graph, the
    eigenvector, and the component counts before and after switching.
    """
    if k < 1 or n0 < 1:
        raise GraphError("cube family needs k >= 1 and n0 >= 1")
    size = 1 << k
    edges = []
    for c in range(n0):
        base = c * size
        for v in range(size):
            for bit in range(k):
                u = v ^ (1 << bit)
                if v < u:
                    edges.append((base + v, base + u))
    g = Graph(n0 * size, edges)
    comp_before = len(g.components())

    def level(u):
        return (u % size).bit_count()

    for (u1, u2), (u3, u4) in switches:
        if level(u2) != level(u1) + 1:
            u1, u2 = ((u1, u2) if level(u1) + 1 == level(u2) else (u2, u1))
        if level(u4) != level(u3) + 1:
            u3, u4 = ((u3, u4) if level(u3) + 1 == level(u4) else (u4, u3))
        if not (level(u1) == level(u3) and level(u2) == level(u4)
                and level(u2) == level(u1) + 1):
            raise GraphError(
                f"switch ({u1},{u2}),({u3},{u4}) is not level-respecting")
        g = edge_switch(g, (u1, u2), (u3, u4))

    f = [k - 2 * level(u) for u in range(g.n)]
    for v in range(g.n):
        if (len(g.adjacency[v]) - 2) * f[v] != sum(f[u] for u in g.adjacency[v]):
            raise GraphError("eigenvector check failed after switching")
    return g, f, comp_before, len(g.components())
