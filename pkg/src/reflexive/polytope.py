"""Lattice polytopes: hulls, polar duality, faces, lattice points, volumes.

Facets are stored as ``(normal, offset)`` pairs meaning
``<x, normal> >= -offset`` with ``normal`` primitive.  With this convention a
polytope containing the origin in its interior has positive offsets, and it
is reflexive exactly when every offset equals 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import _hull, _qla
from .errors import NonPrimitiveNormal, NotFullDimensional, OriginNotInterior
from .lattice_core import (
    IntMatrix,
    determinant,
    dot,
    hermite_normal_form,
    invariant_factors,
    is_primitive,
    transpose,
)

Point = tuple


def _fdiv_ceil(num: Fraction) -> int:
    return -math.floor(-num)


@dataclass(frozen=True)
class Face:
    """A nonempty face, given by vertex indices and the facets containing it."""

    id: int
    dim: int
    vertices: tuple[int, ...]
    tight_facets: tuple[int, ...]


class FaceLattice:
    """All faces of a polytope, graded by dimension, with incidences."""

    def __init__(self, polytope: "LatticePolytope"):
        self.polytope = polytope
        nv = len(polytope.vertices)
        facet_sets = [frozenset(s) for s in polytope.facet_vertex_sets]
        seen = set(facet_sets)
        queue = list(facet_sets)
        while queue:
            f = queue.pop()
            for g in facet_sets:
                h = f & g
                if h and h not in seen:
                    seen.add(h)
                    queue.append(h)
        seen.add(frozenset(range(nv)))
        verts = polytope.vertices

        def face_dim(s):
            return _qla.affine_rank([verts[i] for i in s])

        entries = sorted(((face_dim(s), tuple(sorted(s))) for s in seen))
        self.faces: list[Face] = []
        self._by_vertices: dict[frozenset, Face] = {}
        self._by_tight: dict[frozenset, Face] = {}
        for d, vs in entries:
            sv = frozenset(vs)
            tight = tuple(j for j, fs in enumerate(facet_sets) if sv <= fs)
            face = Face(len(self.faces), d, vs, tight)
            self.faces.append(face)
            self._by_vertices[sv] = face
            self._by_tight[frozenset(tight)] = face
        self.dim = polytope.dim
        self.by_dim: list[list[Face]] = [[] for _ in range(self.dim + 1)]
        for f in self.faces:
            self.by_dim[f.dim].append(f)
        if len(self.by_dim[0]) != nv:
            raise AssertionError("vertex faces do not match the vertex list")
        self.children: dict[int, list[Face]] = {f.id: [] for f in self.faces}
        for f in self.faces:
            if f.dim == 0:
                continue
            sv = set(f.vertices)
            self.children[f.id] = [g for g in self.by_dim[f.dim - 1] if sv.issuperset(g.vertices)]
        self._pulls: dict[int, list[tuple[int, ...]]] = {}

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts for dimensions 0..n-1."""
        return tuple(len(self.by_dim[d]) for d in range(self.dim))

    def face_with_vertices(self, vertices) -> Face:
        return self._by_vertices[frozenset(vertices)]

    def face_with_tight_facets(self, tight) -> Face:
        return self._by_tight[frozenset(tight)]

    @property
    def top(self) -> Face:
        return self.by_dim[self.dim][0]

    def pulling_triangulation(self, face: Face) -> list[tuple[int, ...]]:
        """Simplices (vertex-index tuples) of the pulling triangulation of a face.

        Each face is coned from its smallest vertex index, so triangulations
        of shared faces agree.
        """
        got = self._pulls.get(face.id)
        if got is not None:
            return got
        if face.dim == 0:
            out = [face.vertices]
        else:
            v0 = face.vertices[0]
            out = []
            for child in self.children[face.id]:
                if v0 in child.vertices:
                    continue
                out.extend((v0,) + s for s in self.pulling_triangulation(child))
        self._pulls[face.id] = out
        return out

    def dual_face(self, face: Face, dual_lattice: "FaceLattice") -> Face:
        """The face of the polar dual whose vertices are the facets containing ``face``.

        Requires the dual polytope's vertices to be indexed like this
        polytope's facets, which :meth:`LatticePolytope.polar_dual` ensures.
        """
        if face.dim == self.dim:
            raise ValueError("the polytope itself has the empty dual face")
        return dual_lattice.face_with_vertices(face.tight_facets)


def simplex_volume(vertices: Sequence[Point]) -> int:
    """Normalized volume of a lattice simplex relative to its induced lattice."""
    v0 = vertices[0]
    edges = [tuple(x - y for x, y in zip(v, v0)) for v in vertices[1:]]
    if not edges:
        return 1
    if len(edges) == len(v0):
        return abs(determinant(edges))
    fs = invariant_factors(edges)
    if len(fs) < len(edges):
        return 0
    return math.prod(fs)


class LatticePolytope:
    """Full-dimensional polytope with integral vertices.

    Build one with :func:`hull`; the constructor trusts its arguments.
    """

    def __init__(self, vertices, facets):
        self.vertices: tuple[Point, ...] = tuple(tuple(int(x) for x in v) for v in vertices)
        self.facets: tuple[tuple[Point, int], ...] = tuple(
            (tuple(int(x) for x in a), int(c)) for a, c in facets
        )
        self.dim = len(self.vertices[0])

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={list(self.vertices)})"

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return frozenset(self.vertices) == frozenset(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    # -- incidence -----------------------------------------------------

    def facet_value(self, j: int, x) -> int:
        """``<x, normal_j> + offset_j``; zero on the facet, positive inside."""
        a, c = self.facets[j]
        return dot(a, x) + c

    @cached_property
    def facet_vertex_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(i for i, v in enumerate(self.vertices) if self.facet_value(j, v) == 0)
            for j in range(len(self.facets))
        )

    @cached_property
    def pairing_matrix(self) -> IntMatrix:
        """Facet-by-vertex matrix of ``<v, normal> + offset`` (all >= 0)."""
        return tuple(
            tuple(self.facet_value(j, v) for v in self.vertices) for j in range(len(self.facets))
        )

    def contains(self, x) -> bool:
        return all(self.facet_value(j, x) >= 0 for j in range(len(self.facets)))

    @property
    def origin_interior(self) -> bool:
        return all(c > 0 for _, c in self.facets)

    # -- cached combinatorics --------------------------------------------

    @cached_property
    def face_lattice(self) -> FaceLattice:
        return FaceLattice(self)

    @cached_property
    def _points_and_saturation(self):
        pts = _enumerate_points(self)
        sat = [
            tuple(j for j in range(len(self.facets)) if self.facet_value(j, p) == 0) for p in pts
        ]
        return tuple(pts), tuple(sat)

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points_and_saturation[0]

    @cached_property
    def interior_point_counts(self) -> dict[int, int]:
        """Face id -> number of lattice points in the relative interior of the face."""
        fl = self.face_lattice
        counts = {f.id: 0 for f in fl}
        for s in self._points_and_saturation[1]:
            counts[fl.face_with_tight_facets(s).id] += 1
        return counts

    def l_star(self, face: Face) -> int:
        return self.interior_point_counts[face.id]

    def face_points(self, face: Face) -> list[Point]:
        """All lattice points of a face (boundary included)."""
        tight = set(face.tight_facets)
        pts, sat = self._points_and_saturation
        return [p for p, s in zip(pts, sat) if tight <= set(s)]

    @cached_property
    def volume(self) -> int:
        fl = self.face_lattice
        return sum(
            abs(determinant([tuple(x - y for x, y in zip(self.vertices[i], self.vertices[s[0]]))
                             for i in s[1:]]))
            for s in fl.pulling_triangulation(fl.top)
        )

    def face_volume(self, face: Face) -> int:
        """Normalized volume of a face relative to the lattice of its affine span."""
        if face.dim == self.dim:
            return self.volume
        fl = self.face_lattice
        return sum(
            simplex_volume([self.vertices[i] for i in s]) for s in fl.pulling_triangulation(face)
        )

    # -- duality ---------------------------------------------------------

    @cached_property
    def polar_dual(self) -> "LatticePolytope | RationalPolytope":
        return polar_dual(self)


@dataclass(frozen=True)
class RationalPolytope:
    """Polytope with rational vertices; produced by duality of non-reflexive input."""

    vertices: tuple
    facets: tuple = field(default=())

    @property
    def dim(self):
        return len(self.vertices[0])

    @property
    def polar_dual(self):
        return polar_dual(self)


# -- construction ------------------------------------------------------------


def hull(points) -> LatticePolytope:
    """Convex hull of integer points.

    Raises:
        NotFullDimensional: the points lie in a proper affine subspace.
    """
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise NotFullDimensional("no points")
    idx, facets = _hull.hull(pts)
    verts = [pts[i] for i in idx]
    p = LatticePolytope(verts, [(a, int(c)) for a, c in facets])
    _check_representation(p)
    return p


def _check_representation(p: LatticePolytope):
    n = p.dim
    for v in p.vertices:
        tight = [a for a, c in p.facets if dot(a, v) + c == 0]
        assert _qla.rank(tight) == n, v
    for j, (a, c) in enumerate(p.facets):
        assert is_primitive(a)
        vs = [p.vertices[i] for i in p.facet_vertex_sets[j]]
        assert _qla.affine_rank(vs) == n - 1, (a, c)
        assert all(p.facet_value(j, v) >= 0 for v in p.vertices)


def polar_dual(p):
    """The dual set ``{y : <x, y> >= -1 for all x in p}``.

    When ``p`` is reflexive the result is a :class:`LatticePolytope` whose
    vertex ``j`` is the normal of facet ``j`` of ``p``.
    """
    if isinstance(p, RationalPolytope):
        verts = [tuple(Fraction(x) / c for x in a) for a, c in p.facets]
        if all(x.denominator == 1 for v in verts for x in v):
            return hull([tuple(int(x) for x in v) for v in verts])
        return _rational_polytope(verts)
    if not p.origin_interior:
        raise OriginNotInterior("the origin is not an interior point")
    if all(c == 1 for _, c in p.facets):
        dual_facets = []
        for v in p.vertices:
            g = math.gcd(*v)
            dual_facets.append((tuple(x // g for x in v), Fraction(1, g)))
        if all(c == 1 for _, c in dual_facets):
            return LatticePolytope([a for a, _ in p.facets], [(a, 1) for a, _ in dual_facets])
    verts = [tuple(Fraction(x, c) for x in a) for a, c in p.facets]
    return _rational_polytope(verts)


def _rational_polytope(points) -> RationalPolytope:
    idx, facets = _hull.hull(points)
    return RationalPolytope(tuple(points[i] for i in idx), tuple(facets))


# -- predicates and measurements ----------------------------------------------


@dataclass(frozen=True)
class ReflexivityWitness:
    reflexive: bool
    reason: str = ""
    facet: tuple | None = None


def is_reflexive(p: LatticePolytope) -> ReflexivityWitness:
    """Reflexivity test; on failure the witness names an offending facet."""
    for a, c in p.facets:
        if c <= 0:
            return ReflexivityWitness(False, "origin not interior", (a, c))
    for a, c in p.facets:
        if c != 1:
            return ReflexivityWitness(False, f"facet at integral distance {c}", (a, c))
    return ReflexivityWitness(True)


def integral_distance(normal, level: int, point) -> int:
    """Integral distance from ``point`` to the hyperplane ``<x, normal> = level``."""
    if not is_primitive(normal):
        raise NonPrimitiveNormal(f"{tuple(normal)} is not primitive")
    return abs(level - dot(point, normal))


def lattice_points(p: LatticePolytope) -> tuple[tuple[Point, ...], int, int]:
    """All lattice points with the total count ``l`` and interior count ``l*``."""
    pts, sat = p._points_and_saturation
    return pts, len(pts), sum(1 for s in sat if not s)


def normalized_volume(p: LatticePolytope, face: Face | None = None) -> int:
    return p.volume if face is None else p.face_volume(face)


def face_lattice(p: LatticePolytope) -> FaceLattice:
    return p.face_lattice


def _projections(p: LatticePolytope):
    """Facet lists of the projections onto the first k coordinates, k = 1..n."""
    out = []
    for k in range(1, p.dim):
        proj = sorted({v[:k] for v in p.vertices})
        _, facets = _hull.hull(proj)
        out.append([(a, int(c)) for a, c in facets])
    out.append(list(p.facets))
    return out


def _enumerate_points(p: LatticePolytope) -> list[Point]:
    # fibre-by-fibre scan: each coordinate range is cut exactly by the
    # projection of the polytope onto the leading coordinates
    projs = _projections(p)
    n = p.dim
    out: list[Point] = []

    def bounds(k, prefix):
        lo, hi = None, None
        for a, c in projs[k]:
            rest = c + sum(x * y for x, y in zip(a, prefix))
            ak = a[k]
            if ak > 0:
                b = _fdiv_ceil(Fraction(-rest, ak))
                lo = b if lo is None else max(lo, b)
            elif ak < 0:
                b = math.floor(Fraction(rest, -ak))
                hi = b if hi is None else min(hi, b)
            elif rest < 0:
                return 1, 0
        return lo, hi

    def rec(prefix):
        k = len(prefix)
        lo, hi = bounds(k, prefix)
        if k == n - 1:
            out.extend(prefix + (x,) for x in range(lo, hi + 1))
            return
        for x in range(lo, hi + 1):
            rec(prefix + (x,))

    rec(())
    return out


# -- normal form -------------------------------------------------------------


def _canonical_column_orders(pm):
    """Column orders achieving the lexicographically largest row/column permutation."""
    nrows = len(pm)
    ncols = len(pm[0])
    states = {(frozenset(), ((tuple(range(ncols))),))}
    for _ in range(nrows):
        best = None
        nxt = set()
        for used, blocks in states:
            for r in range(nrows):
                if r in used:
                    continue
                row = pm[r]
                key = []
                newblocks = []
                for blk in blocks:
                    ordered = sorted(blk, key=lambda c: -row[c])
                    key.extend(row[c] for c in ordered)
                    grp = []
                    for c in ordered:
                        if grp and row[grp[-1]] != row[c]:
                            newblocks.append(tuple(sorted(grp)))
                            grp = []
                        grp.append(c)
                    newblocks.append(tuple(sorted(grp)))
                key = tuple(key)
                if best is None or key > best:
                    best = key
                    nxt = set()
                if key == best:
                    nxt.add((used | {r}, tuple(newblocks)))
        states = nxt
    orders = set()
    for _, blocks in states:
        order = []
        for blk in blocks:
            order.extend(blk)
        orders.add(tuple(order))
    return orders


def normal_form(p: LatticePolytope) -> IntMatrix:
    """Vertex matrix canonical under GL(n, Z) and vertex relabelling.

    Two polytopes are lattice equivalent exactly when their normal forms
    are equal.
    """
    pm = p.pairing_matrix
    best = None
    for order in _canonical_column_orders(pm):
        vt = transpose([p.vertices[i] for i in order])
        h, _ = hermite_normal_form(vt)
        cand = transpose(h)
        if best is None or cand > best:
            best = cand
    return best


def polytope_from_matrix(rows) -> LatticePolytope:
    return hull([tuple(r) for r in rows])
