"""Exact linear algebra over integers and rationals.

Everything here works with arbitrary-precision Python ints and
``fractions.Fraction``; nothing ever rounds.  The workhorses are a
fraction-free (Bareiss) determinant, a Smith normal form with
least-absolute-value pivoting, and small rational solvers / kernels used
by the optimization and certificate code.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def bareiss_det(rows):
    """Determinant of a square integer matrix by fraction-free elimination.

    Intermediate entries stay integral (every division below is exact), so
    the result is exact for any size that fits in memory.  ``rows`` is not
    modified.
    """
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rational_det(rows):
    """Exact determinant of a matrix of Fractions (or ints)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    mat = [[Fraction(x) for x in r] for r in rows]
    denom = lcm(*(x.denominator for r in mat for x in r)) if n else 1
    scaled = [[int(x * denom) for x in r] for r in mat]
    return Fraction(bareiss_det(scaled), denom**n)


def solve_rational(a_rows, b):
    """Solve A x = b exactly by Gauss elimination with Fractions.

    Returns the solution vector, or None if the system is singular or
    inconsistent.  Underdetermined consistent systems get one particular
    solution with free variables set to 0.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a_rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def nullspace_int(a_rows, n_cols):
    """Integer basis for the right kernel of an integer/rational matrix.

    Elimination runs over Fractions; each kernel vector is then scaled to
    coprime integers.  Returns a list of length-``n_cols`` integer lists.
    """
    m = len(a_rows)
    mat = [[Fraction(x) for x in row] for row in a_rows]
    pivots = {}
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, m) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(m):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
        if r == m:
            break
    basis = []
    free = [c for c in range(n_cols) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for c, row in pivots.items():
            v[c] = -mat[row][fc]
        den = lcm(*(x.denominator for x in v))
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        basis.append(ints)
    return basis


def smith_normal_form(rows):
    """Diagonal of the Smith normal form of an integer matrix.

    Pivots on the least-absolute-value nonzero entry to keep growth down.
    Returns the list of diagonal entries d_1 | d_2 | ... (nonnegative,
    including any trailing zeros for rank-deficient input).
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        # locate smallest nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        while True:
            # clear column t by division with remainder
            moved = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        moved = True
            if moved:
                continue
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j] != 0:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        moved = True
            if not moved:
                break
        # pivot must divide the rest of the block
        piv = a[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % piv != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        diag.append(abs(piv))
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    return diag
