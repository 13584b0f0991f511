"""Rational polyhedral fans and per-cone singularity classification."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import _hull, _qla
from .errors import FanNotComplete, NotGorenstein, NotStronglyConvex, OriginNotInterior
from .lattice_core import (
    AbelianQuotient,
    dot,
    hermite_normal_form,
    identity,
    invariant_factors,
    lattice_quotient,
    primitive,
    saturation,
    solve_integer,
)
from .polytope import LatticePolytope, hull


def _span_coordinates(vectors, ambient_rank):
    """Integer coordinates of ``vectors`` in a basis of their saturated span."""
    if len(vectors) >= ambient_rank and _qla.rank(vectors) == ambient_rank:
        return identity(ambient_rank), [tuple(v) for v in vectors]
    basis = saturation(vectors, ambient_rank)
    cols = [list(col) for col in zip(*basis)] if basis else []
    coords = []
    for v in vectors:
        x = _qla.solve(cols, list(v))
        assert x is not None and all(c.denominator == 1 for c in x)
        coords.append(tuple(int(c) for c in x))
    return basis, coords


@dataclass(frozen=True)
class Cone:
    """Cone spanned by primitive ray generators."""

    rays: tuple

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))

    @property
    def ambient_rank(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    @cached_property
    def dim(self) -> int:
        return _qla.rank(self.rays) if self.rays else 0

    @cached_property
    def _facets_in_span(self):
        basis, coords = _span_coordinates(self.rays, self.ambient_rank)
        if len(basis) == 1:
            normals = sorted({(1,) if c[0] > 0 else (-1,) for c in coords})
            if len(normals) > 1:
                return basis, coords, []
            return basis, coords, normals
        return basis, coords, _hull.cone_facets(coords)

    @property
    def is_strongly_convex(self) -> bool:
        if not self.rays:
            return True
        if len(self.rays) == self.dim:
            return True
        basis, _, normals = self._facets_in_span
        return bool(normals) and _qla.rank(normals) == len(basis)

    def facet_normals(self):
        """Inner normals in the ambient space; only for full-dimensional cones."""
        assert self.dim == self.ambient_rank
        basis, _, normals = self._facets_in_span
        # y = basis^T c, so u . c = (basis^-1 u) . y
        out = []
        for u in normals:
            x = _qla.solve([list(r) for r in basis], list(u))
            out.append(primitive([int(c * _lcm_den(x)) for c in x]))
        return out

    def contains(self, y) -> bool:
        return all(dot(u, y) >= 0 for u in self.facet_normals())


def _lcm_den(xs):
    from math import lcm

    return lcm(*(Fraction(x).denominator for x in xs))


@dataclass(frozen=True)
class SingularityReport:
    simplicial: bool
    gorenstein: bool
    terminal: bool
    canonical: bool
    smooth: bool
    q_gorenstein: bool = True
    k_sigma: tuple | None = None
    extra_points: tuple = field(default=())

    @property
    def elementary(self) -> bool:
        """Simplicial and terminal: the ray simplex has no other lattice points."""
        return self.simplicial and self.terminal


def classify_cone(c: Cone) -> SingularityReport:
    """Exact singularity flags of the affine toric variety of ``c``."""
    if not c.rays:
        return SingularityReport(True, True, True, True, True, True, ())
    if not c.is_strongly_convex:
        raise NotStronglyConvex(f"cone over {c.rays} contains a line")
    k = c.dim
    simplicial = len(c.rays) == k
    ones = [1] * len(c.rays)
    k_int = solve_integer(c.rays, ones)
    k_rat = _qla.solve([list(r) for r in c.rays], ones)
    smooth = simplicial and all(f == 1 for f in invariant_factors(c.rays))
    if k_rat is None:
        rep = SingularityReport(simplicial, False, False, False, False, False, None)
        _assert_implications(rep)
        return rep
    k_sigma = k_int if k_int is not None else tuple(k_rat)
    basis, coords = _span_coordinates(c.rays, c.ambient_rank)
    if simplicial:
        extra, below = _slab_points_simplicial(coords)
    else:
        extra, below = _slab_points_by_hull(coords)
    extra = [tuple(sum(x * b[i] for x, b in zip(pt, basis)) for i in range(c.ambient_rank))
             for pt in extra]
    rep = SingularityReport(
        simplicial=simplicial,
        gorenstein=k_int is not None,
        terminal=not extra,
        canonical=not below,
        smooth=smooth,
        q_gorenstein=True,
        k_sigma=tuple(k_sigma),
        extra_points=tuple(extra),
    )
    _assert_implications(rep)
    if k <= 2 and rep.gorenstein and rep.elementary:
        assert rep.smooth, "elementary simplices of dimension <= 2 are regular"
    return rep


def _slab_points_simplicial(coords):
    """Nonzero non-ray lattice points of ``conv(0, rays)`` for a simplicial cone.

    Residues of ``Z^k`` modulo the ray lattice are read off the diagonal of
    its Hermite normal form; each residue gives one point of the half-open
    parallelepiped, whose barycentric sum is its value under ``k_sigma``.
    """
    k = len(coords)
    h, _ = hermite_normal_form(coords)
    diag = [h[i][i] for i in range(k)]
    inv = _qla.inverse(coords)
    extra, below = [], []
    for y in itertools.product(*(range(d) for d in diag)):
        if not any(y):
            continue
        lam = [sum(y[i] * inv[i][j] for i in range(k)) for j in range(k)]
        frac = [x - math.floor(x) for x in lam]
        total = sum(frac)
        if total <= 1:
            pt = tuple(int(sum(frac[j] * coords[j][i] for j in range(k))) for i in range(k))
            extra.append(pt)
            if total < 1:
                below.append(pt)
    return extra, below


def _slab_points_by_hull(coords):
    """Same contract as :func:`_slab_points_simplicial`, by direct enumeration."""
    k = len(coords[0])
    origin = tuple([0] * k)
    slab = hull([origin] + list(coords))
    ray_set = set(coords)
    extra = [p for p in slab.points if p != origin and p not in ray_set]
    # rays span the span lattice here, so k_sigma in span coordinates is
    # determined by any k independent rays
    kc = _qla.solve([list(r) for r in coords], [1] * len(coords))
    below = [p for p in extra if sum(Fraction(a) * b for a, b in zip(kc, p)) < 1]
    return extra, below


def _assert_implications(rep: SingularityReport):
    if rep.smooth:
        assert rep.terminal and rep.gorenstein and rep.simplicial, rep
    if rep.gorenstein:
        assert rep.canonical, rep


class Fan:
    """A fan given by primitive rays and cones as frozensets of ray indices."""

    def __init__(self, rays, cones, ambient_rank: int | None = None):
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.ambient_rank = ambient_rank if ambient_rank is not None else len(self.rays[0])
        self.cones = frozenset(frozenset(c) for c in cones) | {frozenset()}
        self._dims = {c: (_qla.rank([self.rays[i] for i in c]) if c else 0) for c in self.cones}

    @classmethod
    def from_maximal(cls, rays, maximal_cones, ambient_rank=None) -> "Fan":
        """Close a list of maximal cones (ray-index tuples) under faces."""
        rays = [tuple(r) for r in rays]
        cones = set()
        for mc in maximal_cones:
            idx = tuple(mc)
            cones |= _cone_faces(idx, [rays[i] for i in idx], len(rays[0]))
        return cls(rays, cones, ambient_rank)

    def cones_of_dim(self, d: int):
        return sorted((c for c in self.cones if self._dims[c] == d), key=sorted)

    @cached_property
    def maximal_cones(self):
        tops: list[frozenset] = []
        for c in sorted(self.cones, key=len, reverse=True):
            if not any(c <= t for t in tops):
                tops.append(c)
        return sorted(tops, key=sorted)

    def cone(self, index_set) -> Cone:
        return Cone(tuple(self.rays[i] for i in sorted(index_set)))

    def cone_key_set(self):
        """Cones as frozensets of ray vectors, for comparing fans."""
        return frozenset(frozenset(self.rays[i] for i in c) for c in self.cones)

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.cone_key_set() == other.cone_key_set()

    def __hash__(self):
        return hash(self.cone_key_set())

    @cached_property
    def is_complete(self) -> bool:
        n = self.ambient_rank
        tops = self.maximal_cones
        if any(self._dims[c] != n for c in tops):
            return False
        walls: dict[frozenset, int] = {}
        for c in tops:
            for f in _cone_faces(tuple(sorted(c)), [self.rays[i] for i in sorted(c)], n):
                if f and _qla.rank([self.rays[i] for i in f]) == n - 1:
                    walls[f] = walls.get(f, 0) + 1
        if any(v != 2 for v in walls.values()):
            return False
        rng = random.Random(0)
        top_cones = [self.cone(c) for c in tops]
        hits_needed = 8
        tries = 0
        while hits_needed and tries < 200:
            tries += 1
            y = tuple(rng.randint(-10**6, 10**6) for _ in range(n))
            if not any(y):
                continue
            inside = [c for c in top_cones if c.contains(y)]
            if len(inside) != 1:
                if not inside:
                    return False
                continue  # on a wall; resample
            hits_needed -= 1
        return hits_needed == 0

    def singularity_reports(self) -> dict[frozenset, SingularityReport]:
        return {c: classify_cone(self.cone(c)) for c in self.maximal_cones}


def _cone_faces(idx, rays, ambient_rank):
    """All faces (as frozensets of the given indices) of the cone over ``rays``."""
    full = frozenset(idx)
    if not rays:
        return {frozenset()}
    basis, coords = _span_coordinates(rays, ambient_rank)
    if len(basis) == 1:
        facets = [frozenset()]
    else:
        normals = _hull.cone_facets(coords)
        facets = [frozenset(i for i, c in zip(idx, coords) if dot(u, c) == 0) for u in normals]
    faces = {full, frozenset()}
    queue = list(facets)
    faces |= set(facets)
    while queue:
        f = queue.pop()
        for g in facets:
            h = f & g
            if h not in faces:
                faces.add(h)
                queue.append(h)
    return faces


def face_fan(p: LatticePolytope) -> Fan:
    """Cones over the proper faces of ``p`` (which must contain 0 inside)."""
    if not p.origin_interior:
        raise OriginNotInterior("face fan needs the origin in the interior")
    rays = [primitive(v) for v in p.vertices]
    fl = p.face_lattice
    cones = [frozenset(f.vertices) for f in fl if f.dim < p.dim]
    return Fan(rays, cones)


def normal_fan(p: LatticePolytope) -> Fan:
    """Inner normal cones of all nonempty faces of ``p``."""
    rays = [a for a, _ in p.facets]
    fl = p.face_lattice
    cones = [frozenset(f.tight_facets) for f in fl]
    return Fan(rays, cones)


def fan_fundamental_group(f: Fan) -> AbelianQuotient:
    """``N`` modulo the sublattice spanned by all ray generators."""
    if not f.is_complete:
        raise FanNotComplete("fan is not complete")
    return lattice_quotient(f.rays, f.ambient_rank)


def is_fano_gorenstein(f: Fan) -> bool:
    """Whether the complete fan is the face fan of a reflexive polytope.

    Every maximal cone needs an integral ``k`` with ``<k, ray> = 1`` on its
    rays; the fan is Fano exactly when ``<k, ray> < 1`` for all other rays.
    """
    if not f.is_complete:
        raise FanNotComplete("fan is not complete")
    ks = []
    for c in f.maximal_cones:
        rays = [f.rays[i] for i in c]
        k = solve_integer(rays, [1] * len(rays))
        if k is None:
            raise NotGorenstein(f"cone over {rays} has no integral k_sigma")
        ks.append((c, k))
    for c, k in ks:
        for i, r in enumerate(f.rays):
            if i not in c and dot(k, r) >= 1:
                return False
    return len({k for _, k in ks}) == len(ks)
