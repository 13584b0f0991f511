"""Small exact linear algebra over the rationals.

Elimination is fraction-free on integer rows (rows are rescaled and divided
by their content as we go); Fractions only appear in returned solutions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _int_row(r):
    if all(type(x) is int for x in r):
        return list(r)
    fr = [Fraction(x) for x in r]
    den = lcm(*(x.denominator for x in fr))
    return [int(x * den) for x in fr]


def _normalize(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _eliminate(rows, ncols, full=False):
    """Fraction-free (Gauss-)Jordan elimination; returns (rows, pivots)."""
    a = [_int_row(r) for r in rows]
    nrows = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(nrows) if full else range(r + 1, nrows):
            if i == r:
                continue
            x = a[i][c]
            if x:
                a[i] = _normalize([pv * y - x * z for y, z in zip(a[i], pr)])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(_eliminate(rows, len(rows[0]))[1])


def rref(rows):
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    if not rows:
        return [], []
    a, piv = _eliminate(rows, len(rows[0]), full=True)
    out = []
    for i, row in enumerate(a):
        if i < len(piv):
            pv = row[piv[i]]
            out.append([Fraction(x, pv) for x in row])
        else:
            out.append([Fraction(x) for x in row])
    return out, piv


def solve(a, b):
    """A solution ``x`` of ``a @ x == b`` (free variables zero), else None."""
    ncols = len(a[0])
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    red, piv = _eliminate(aug, ncols + 1, full=True)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, piv):
        x[c] = Fraction(row[-1], row[c])
    return x


def affine_rank(points) -> int:
    """Dimension of the affine span."""
    if not points:
        return -1
    p0 = points[0]
    if len(points) == 1:
        return 0
    return rank([[x - y for x, y in zip(p, p0)] for p in points[1:]])


def barycentric(vertices, point):
    """Affine coordinates of ``point`` w.r.t. affinely independent ``vertices``.

    Returns None when the point is off their affine span.
    """
    n = len(point)
    k = len(vertices)
    a = [[vertices[j][i] for j in range(k)] for i in range(n)] + [[1] * k]
    b = list(point) + [1]
    return solve(a, b)


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def adjugate_det(rows):
    """Integer ``(adj, det)`` of a square integer matrix, ``inv = adj / det``."""
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    red, piv = _eliminate(aug, 2 * n, full=True)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    den = 1
    for i in range(n):
        den = lcm(den, red[i][i])
    adj = [[x * (den // red[i][i]) for x in red[i][n:]] for i in range(n)]
    if den < 0:
        den = -den
        adj = [[-x for x in r] for r in adj]
    return adj, den
