"""Exact integer linear algebra.

Matrices are tuples of row tuples of Python ints.  Everything here is exact
and arbitrary precision; no rationals, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, prod
from typing import Sequence

from .errors import NoPositiveRelation

IntVector = tuple
IntMatrix = tuple


def as_matrix(rows) -> IntMatrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def matmul(a, b) -> IntMatrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


def vec_gcd(v) -> int:
    return reduce(gcd, v, 0)


def primitive(v) -> IntVector:
    """Divide ``v`` by the gcd of its entries."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in v)


def is_primitive(v) -> bool:
    return vec_gcd(v) == 1


def determinant(m) -> int:
    """Bareiss fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(d, u, v)`` with ``u @ m @ v == d``.

    ``u`` and ``v`` are unimodular and the diagonal of ``d`` is nonnegative
    with each entry dividing the next.  Pivots are chosen by smallest
    absolute value to keep intermediate entries small.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        if k:
            a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        if k:
            for r in a:
                r[dst] += k * r[src]
            for r in v:
                r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t onto the pivot
                cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            p = a[t][t]
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return as_matrix(a), as_matrix(u), as_matrix(v)


def invariant_factors(m) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form (ones included)."""
    d, _, _ = smith_normal_form(m)
    return tuple(d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i])


def hermite_normal_form(m) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form ``(h, u)`` with ``u @ m == h``.

    ``h`` is in row echelon form, pivots are positive, entries above a pivot
    lie in ``[0, pivot)``, and zero rows come last.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if a[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, rows):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < rows and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
    return as_matrix(a), as_matrix(u)


def row_lattice_basis(vectors, ambient_rank: int) -> IntMatrix:
    """HNF basis (nonzero rows) of the lattice spanned by ``vectors``."""
    if not vectors:
        return ()
    h, _ = hermite_normal_form(as_matrix(vectors))
    return tuple(r for r in h if any(r))


def integer_kernel(m, ncols: int | None = None) -> IntMatrix:
    """Basis (as rows) of ``{x in Z^cols : m @ x == 0}``; saturated."""
    if not m:
        return identity(ncols or 0)
    cols = len(m[0])
    d, _, v = smith_normal_form(m)
    rank = sum(1 for i in range(min(len(d), cols)) if d[i][i])
    return tuple(tuple(v[i][j] for i in range(cols)) for j in range(rank, cols))


def saturation(vectors, ambient_rank: int) -> IntMatrix:
    """Basis of ``span_Q(vectors) ∩ Z^n``."""
    if not vectors or not any(any(v) for v in vectors):
        return ()
    k = integer_kernel(as_matrix(vectors))
    if not k:
        return identity(ambient_rank)
    return row_lattice_basis(integer_kernel(k), ambient_rank)


def solve_integer(m, b) -> IntVector | None:
    """Some integer ``x`` with ``m @ x == b``, or ``None`` if none exists."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d, u, v = smith_normal_form(m)
    ub = [dot(row, b) for row in u]
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < cols else 0
        if di == 0:
            if ub[i]:
                return None
        elif ub[i] % di:
            return None
        else:
            y[i] = ub[i] // di
    return tuple(dot(row, y) for row in v)


def rank(m) -> int:
    if not m:
        return 0
    return len(invariant_factors(m))


@dataclass(frozen=True)
class AbelianQuotient:
    """Finitely generated abelian group ``Z^free_rank ⊕ ⊕ Z/f_i``.

    Factors of 1 are never stored, so equal groups compare equal.
    """

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        fs = self.invariant_factors
        assert all(f > 1 for f in fs), fs
        assert all(b % a == 0 for a, b in zip(fs, fs[1:])), fs

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when infinite."""
        if self.free_rank:
            return None
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and not self.free_rank

    def __str__(self):
        parts = [f"Z/{f}" for f in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def lattice_quotient(generators, ambient_rank: int) -> AbelianQuotient:
    """``Z^ambient_rank / <generators>`` as invariant factors plus free rank."""
    gens = [tuple(g) for g in generators if any(g)]
    if not gens:
        return AbelianQuotient((), ambient_rank)
    fs = invariant_factors(as_matrix(gens))
    return AbelianQuotient(tuple(f for f in fs if f != 1), ambient_rank - len(fs))


def primitive_relation(points) -> IntVector:
    """The primitive strictly positive ``w`` with ``sum(w_i * p_i) == 0``.

    Raises:
        NoPositiveRelation: the relation space is not one-dimensional or the
            relation is not strictly positive.
    """
    pts = as_matrix(points)
    ker = integer_kernel(transpose(pts), ncols=len(pts))
    if len(ker) != 1:
        raise NoPositiveRelation(f"relation space has dimension {len(ker)}, expected 1")
    w = primitive(ker[0])
    if all(x < 0 for x in w):
        w = tuple(-x for x in w)
    if not all(x > 0 for x in w):
        raise NoPositiveRelation(f"relation {w} is not strictly positive")
    return w
