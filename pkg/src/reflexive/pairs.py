"""Reflexive pairs (polytope plus reference lattice) and reflexive simplices.

A pair keeps its polytope in ambient coordinates together with a basis of
the lattice M (rows, possibly rational when M is finer than Z^n).  All
lattice questions are answered on the polytope rewritten in M-coordinates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import _qla
from .errors import DegreesNotUnit, NotAMorphism, NotASimplex, NotReflexive
from .lattice_core import (
    AbelianQuotient,
    IntMatrix,
    determinant,
    identity,
    integer_kernel,
    lattice_quotient,
    matmul,
    primitive_relation,
    row_lattice_basis,
    transpose,
)
from .polytope import LatticePolytope, hull, is_reflexive, normal_form


def _as_int(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"{x} is not integral")
    return int(x)


def _simplify(m):
    """Rational matrix with integral entries stored as ints."""
    return tuple(
        tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in row) for row in m
    )


def _rat_matmul(a, b):
    return _simplify(
        tuple(sum(Fraction(x) * y for x, y in zip(row, col)) for col in zip(*b)) for row in a
    )


class ReflexivePair:
    """A lattice polytope together with the lattice ``M`` it is measured in.

    ``lattice`` holds a basis of M as rows in ambient coordinates; the
    default is the coordinate lattice.  ``embedding`` optionally records
    how the coordinate lattice sits in a bigger one (set for weighted
    simplices).
    """

    embedding: IntMatrix | None = None

    def __init__(self, polytope: LatticePolytope, lattice=None, check: bool = True):
        self.polytope = polytope
        n = polytope.dim
        self.lattice = _simplify(lattice if lattice is not None else identity(n))
        if len(self.lattice) != n or _qla.rank([list(r) for r in self.lattice]) != n:
            raise ValueError("lattice basis must have full rank")
        if check:
            w = is_reflexive(self.local)
            if not w.reflexive:
                raise NotReflexive(f"pair is not reflexive: {w.reason}")

    @property
    def dim(self) -> int:
        return self.polytope.dim

    def __repr__(self):
        return f"ReflexivePair(vertices={list(self.polytope.vertices)}, lattice={self.lattice})"

    @cached_property
    def _inverse(self):
        return _qla.inverse([list(r) for r in self.lattice])

    def to_local(self, x) -> tuple[int, ...]:
        """M-coordinates of an ambient point of M."""
        c = [sum(Fraction(xi) * self._inverse[i][j] for i, xi in enumerate(x))
             for j in range(self.dim)]
        return tuple(_as_int(v) for v in c)

    def to_ambient(self, c):
        return _simplify([[sum(Fraction(ci) * self.lattice[i][j] for i, ci in enumerate(c))
                           for j in range(self.dim)]])[0]

    @cached_property
    def local(self) -> LatticePolytope:
        """The polytope in M-coordinates."""
        return hull([self.to_local(v) for v in self.polytope.vertices])

    @cached_property
    def dual(self) -> LatticePolytope:
        """``Δ*`` in the coordinates of the dual basis of N."""
        return self.local.polar_dual

    def normal_form(self) -> IntMatrix:
        return normal_form(self.local)

    def degree(self) -> int:
        """Normalized volume of Δ relative to M."""
        return self.local.volume

    def dual_pair(self) -> "ReflexivePair":
        return ReflexivePair(self.dual, identity(self.dim))


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    total_degree: int
    matrix: IntMatrix

    @property
    def n(self) -> int:
        return len(self.weights) - 1


# -- lattice tower -------------------------------------------------------------


def _pair_of(x) -> ReflexivePair:
    return x if isinstance(x, ReflexivePair) else ReflexivePair(x)


def vertex_sublattice(pair) -> tuple[IntMatrix, int, AbelianQuotient]:
    """``(basis, index, M / M_Δ)``; the basis is in ambient coordinates."""
    pair = _pair_of(pair)
    verts = pair.local.vertices
    h = row_lattice_basis(verts, pair.dim)
    index = abs(determinant(h))
    basis = _rat_matmul(h, pair.lattice)
    return basis, index, lattice_quotient(verts, pair.dim)


def minimal_pair(pair) -> ReflexivePair:
    pair = _pair_of(pair)
    basis, _, _ = vertex_sublattice(pair)
    return ReflexivePair(pair.polytope, basis)


def maximal_pair(pair) -> ReflexivePair:
    """Same polytope over ``M^Δ``, the lattice dual to the span of the dual vertices."""
    pair = _pair_of(pair)
    g = row_lattice_basis(pair.dual.vertices, pair.dim)
    # rows of (g^T)^-1 form the dual basis of the lattice spanned by g
    dual_basis = _qla.inverse([list(r) for r in transpose(g)])
    return ReflexivePair(pair.polytope, _rat_matmul(dual_basis, pair.lattice))


def pair_fundamental_group(pair) -> AbelianQuotient:
    """``N / N_{Δ*}``: how far the dual vertices fall short of spanning N."""
    pair = _pair_of(pair)
    return lattice_quotient(pair.dual.vertices, pair.dim)


def polytope_fundamental_group(p) -> tuple[AbelianQuotient, int]:
    """``M^Δ / M_Δ`` with its order, checked against the two pair groups."""
    pair = _pair_of(p)
    g = row_lattice_basis(pair.dual.vertices, pair.dim)
    # M_Δ in the basis of M^Δ: vertex coordinates times g^T
    q = lattice_quotient(matmul(pair.local.vertices, transpose(g)), pair.dim)
    order = q.order
    other = pair_fundamental_group(pair).order * vertex_sublattice(pair)[2].order
    assert order == other, (order, other)
    return q, order


# -- morphisms -----------------------------------------------------------------


def morphism_check(phi, source, target) -> tuple[int, AbelianQuotient]:
    """Degree and cokernel of ``x -> x @ phi`` from source to target.

    ``phi`` acts on M-coordinates of the source and lands in M-coordinates
    of the target.
    """
    source, target = _pair_of(source), _pair_of(target)
    phi = tuple(tuple(int(x) for x in r) for r in phi)
    n = source.dim
    if len(phi) != n or any(len(r) != target.dim for r in phi) or n != target.dim:
        raise NotAMorphism("map has the wrong shape")
    if determinant(phi) == 0:
        raise NotAMorphism("map is not injective")
    images = {tuple(sum(x * phi[i][j] for i, x in enumerate(v)) for j in range(n))
              for v in source.local.vertices}
    if images != set(target.local.vertices):
        raise NotAMorphism("vertices do not map onto the target vertices")
    d1, d2 = source.degree(), target.degree()
    if d2 % d1:
        raise NotAMorphism(f"degree ratio {d2}/{d1} is not integral")
    deg = d2 // d1
    coker = lattice_quotient(phi, n)
    assert coker.order == deg == abs(determinant(phi)), (coker, deg)
    assert source.dual.volume == deg * target.dual.volume
    return deg, coker


# -- reflexive simplices ----------------------------------------------------------


def _simplex_data(p):
    pair = _pair_of(p)
    q = pair.local
    if len(q.vertices) != q.dim + 1:
        raise NotASimplex(f"polytope has {len(q.vertices)} vertices, expected {q.dim + 1}")
    return pair, q


def _b_matrix(q: LatticePolytope, dual_vertices):
    return tuple(tuple(sum(a * b for a, b in zip(v, u)) for u in dual_vertices)
                 for v in q.vertices)


def _opposite_normals(q: LatticePolytope):
    """Facet normal opposite each vertex, in vertex order."""
    out = []
    for i in range(len(q.vertices)):
        j = next(j for j, s in enumerate(q.facet_vertex_sets) if i not in s)
        out.append(q.facets[j][0])
    return out


def simplex_weights(p) -> WeightSystem:
    """Weights, degrees and matrix ``B`` of a reflexive simplex."""
    pair, q = _simplex_data(p)
    n = q.dim
    w = primitive_relation(q.vertices)
    b = _b_matrix(q, _opposite_normals(q))
    degrees = tuple(b[i][i] + 1 for i in range(n + 1))
    big = math.lcm(*degrees)
    assert all(b[i][j] == -1 for i in range(n + 1) for j in range(n + 1) if i != j), b
    assert b == transpose(b)
    assert _qla.rank([list(r) for r in b]) == n
    assert sum(Fraction(1, d) for d in degrees) == 1
    assert tuple(w) == tuple(big // d for d in degrees), (w, degrees)
    assert sum(w) == big
    return WeightSystem(tuple(w), degrees, big, b)


def _check_degrees(degrees):
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) < 2 or any(d <= 0 for d in degrees) or sum(Fraction(1, d) for d in degrees) != 1:
        raise DegreesNotUnit(f"1/d summed over {degrees} is not 1")
    return degrees


def weighted_simplex(degrees) -> ReflexivePair:
    """The maximal pair ``(Δ(w), M(w))`` for degrees with ``Σ 1/d_i = 1``.

    ``M(w)`` is the kernel of ``x -> Σ w_i x_i`` in ``Z^(n+1)``; the returned
    pair uses the HNF basis of that kernel as coordinates.
    """
    degrees = _check_degrees(degrees)
    big = math.lcm(*degrees)
    w = [big // d for d in degrees]
    m = len(degrees)
    basis = row_lattice_basis(integer_kernel((tuple(w),), m), m)
    cols = [list(c) for c in zip(*basis)]
    verts = []
    for j, d in enumerate(degrees):
        x = [-1] * m
        x[j] = d - 1
        c = _qla.solve(cols, x)
        verts.append(tuple(_as_int(t) for t in c))
    pair = ReflexivePair(hull(verts))
    pair.embedding = basis
    assert pair_fundamental_group(pair).is_trivial, "weighted simplex pair is not maximal"
    return pair


def _enumerate_rec(k, mass, lo, prefix, out):
    if k == 1:
        if mass.numerator == 1 and mass.denominator >= lo:
            out.append(prefix + (mass.denominator,))
        return
    d = max(lo, math.floor(1 / mass) + 1)
    while Fraction(k) / d >= mass:
        _enumerate_rec(k - 1, mass - Fraction(1, d), d, prefix + (d,), out)
        d += 1


def enumerate_degree_tuples(n: int) -> list[tuple[int, ...]]:
    """All nondecreasing ``(d_0, ..., d_n)`` with ``Σ 1/d_i = 1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out: list[tuple[int, ...]] = []
    _enumerate_rec(n + 1, Fraction(1), 2, (), out)
    return out


def _character_kernel_group(degrees) -> AbelianQuotient:
    """Kernel of ``a -> Σ w_i a_i mod d`` on ``⊕ Z/d_i``, modulo the diagonal."""
    big = math.lcm(*degrees)
    w = [big // d for d in degrees]
    last = len(degrees) - 1
    kernel = []
    for head in itertools.product(*(range(d) for d in degrees[:last])):
        r = -sum(a * b for a, b in zip(w, head)) % big
        # w_last * a_last ranges over the multiples of w_last mod big
        if r % w[last] == 0:
            kernel.append(head + (r // w[last],))
    diag = {tuple(t % d for d in degrees) for t in range(big)}
    size = len(kernel) // len(diag)

    def torsion(k):
        hits = sum(1 for x in kernel if tuple(k * a % d for a, d in zip(x, degrees)) in diag)
        return hits // len(diag)

    exps: dict[int, list[int]] = {}
    for p in _prime_factors(size):
        counts = [1]
        j = 1
        while counts[-1] < _p_part(size, p):
            counts.append(torsion(p**j))
            j += 1
        # number of cyclic p-factors of order >= p^j
        ge = [round(math.log(counts[j] // counts[j - 1], p)) for j in range(1, len(counts))]
        e = []
        for j, c in enumerate(ge, start=1):
            nxt = ge[j] if j < len(ge) else 0
            e.extend([j] * (c - nxt))
        exps[p] = sorted(e, reverse=True)
    width = max((len(v) for v in exps.values()), default=0)
    factors = []
    for i in range(width):
        factors.append(math.prod(p ** v[i] for p, v in exps.items() if i < len(v)))
    return AbelianQuotient(tuple(sorted(factors)))


def _prime_factors(k):
    out, p = [], 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def _p_part(k, p):
    r = 1
    while k % p == 0:
        k //= p
        r *= p
    return r


def fermat_group(degrees) -> tuple[AbelianQuotient, int]:
    """``π₁`` of the dual weighted simplex, computed two independent ways."""
    degrees = _check_degrees(degrees)
    big = math.lcm(*degrees)
    via_snf = vertex_sublattice(weighted_simplex(degrees))[2]
    via_chars = _character_kernel_group(sorted(degrees))
    if via_snf != via_chars:
        raise AssertionError(f"SNF {via_snf} and character kernel {via_chars} disagree")
    order = math.prod(degrees) // big**2
    assert via_snf.order == order, (via_snf, order)
    return via_snf, order


def is_selfdual_simplex(p) -> bool:
    """Check ``B(Δ) = B(Δ*)`` and that the two maximal pairs are equivalent."""
    pair, q = _simplex_data(p)
    dual = q.polar_dual
    b = sorted(_b_matrix(q, _opposite_normals(q)))
    b_dual = sorted(_b_matrix(dual, _opposite_normals(dual)))
    if sorted(sorted(r) for r in b) != sorted(sorted(r) for r in b_dual):
        return False
    top = maximal_pair(pair)
    top_dual = maximal_pair(ReflexivePair(dual))
    return top.normal_form() == top_dual.normal_form()
