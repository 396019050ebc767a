"""Exact rational linear feasibility with Farkas certificates.

A single phase-I simplex over ``fractions.Fraction`` with Bland's rule:
it either finds x with A x = b (x >= 0 on the designated columns, free
elsewhere) or returns a separating vector z with

    z . A_j >= 0  for every nonnegative column j,
    z . A_j  = 0  for every free column j,
    z . b    < 0.

Exactness matters: the extremality certificates built on top of this
must never misclassify a boundary case, so no floating point is allowed
anywhere in the pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    x: tuple | None          # solution over the original columns
    certificate: tuple | None  # Farkas vector z over the rows


def solve_eq_feasibility(a_rows, b, free_cols=()):
    """Feasibility of {A x = b, x >= 0 except on free_cols} over exact rationals.

    ``a_rows`` is a list of m rows of length n.  Free columns are handled
    by the usual split into a difference of two nonnegative variables.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    free = set(free_cols)

    # column layout: original nonneg columns, then (+,-) pairs for free ones
    col_map = []  # tableau column -> (orig index, sign)
    cols = []
    for j in range(n):
        col_map.append((j, 1))
        cols.append([Fraction(a_rows[i][j]) for i in range(m)])
    for j in sorted(free):
        col_map.append((j, -1))
        cols.append([-Fraction(a_rows[i][j]) for i in range(m)])
    width = len(cols)

    rhs = [Fraction(bi) for bi in b]
    row_sign = [1] * m
    for i in range(m):
        if rhs[i] < 0:
            rhs[i] = -rhs[i]
            row_sign[i] = -1
            for c in cols:
                c[i] = -c[i]

    # tableau rows: structural columns, artificial columns (identity), rhs
    tab = [[cols[j][i] for j in range(width)]
           + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
           + [rhs[i]] for i in range(m)]
    basis = [width + i for i in range(m)]

    def objective_row():
        # phase-I reduced costs: cost 1 on artificials, 0 elsewhere
        z = [Fraction(0)] * (width + m + 1)
        for i, bv in enumerate(basis):
            if bv >= width:
                for j in range(width + m + 1):
                    z[j] += tab[i][j]
        red = [ (Fraction(1) if j >= width else Fraction(0)) - z[j]
                for j in range(width + m) ]
        return red, z[width + m]

    while True:
        red, obj = objective_row()
        enter = next((j for j in range(width + m) if red[j] < 0), None)
        if enter is None:
            break
        # Bland: smallest index entering; smallest index leaving on ties
        ratio = None
        leave = None
        for i in range(m):
            if tab[i][enter] > 0:
                r = tab[i][-1] / tab[i][enter]
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio = r
                    leave = i
        if leave is None:
            raise ArithmeticError("phase-I objective unbounded; cannot happen")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        basis[leave] = enter

    _, obj = objective_row()
    if obj == 0:
        x = [Fraction(0)] * n
        for i, bv in enumerate(basis):
            if bv < width:
                j, sign = col_map[bv]
                x[j] += sign * tab[i][-1]
        return FeasibilityResult(feasible=True, x=tuple(x), certificate=None)

    # infeasible: simplex multipliers pi from the artificial columns;
    # reduced cost of artificial k is 1 - pi_k, so pi_k = 1 - red[width+k]
    red, obj = objective_row()
    pi = [Fraction(1) - red[width + k] for k in range(m)]
    z = tuple(-row_sign[i] * pi[i] for i in range(m))
    return FeasibilityResult(feasible=False, x=None, certificate=z)


def verify_farkas(a_rows, b, z, free_cols=()):
    """Check the certificate inequalities exactly (used in tests and reports)."""
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    free = set(free_cols)
    for j in range(n):
        s = sum(Fraction(z[i]) * Fraction(a_rows[i][j]) for i in range(m))
        if j in free:
            if s != 0:
                return False
        elif s < 0:
            return False
    zb = sum(Fraction(z[i]) * Fraction(b[i]) for i in range(m))
    return zb < 0
