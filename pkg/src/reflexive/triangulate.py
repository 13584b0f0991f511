"""Regular fine triangulations and MPCP refinements of reflexive face fans.

Triangulations are built by placing points in lexicographic order.  The
lexicographically largest point of any finite set is a vertex of its hull,
so every point is placed outside the hull of its predecessors and the
result is fine.  Placing is regular; heights are grown point by point and
returned as an integer certificate that is re-checked exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _qla
from .errors import (
    DimensionTooHigh,
    MalformedTriangulation,
    NotAdmissible,
    NotReflexive,
)
from .lattice_core import dot
from .polytope import Face, LatticePolytope, hull, is_reflexive, simplex_volume
from .toric_fan import Fan, SingularityReport, classify_cone


@dataclass(frozen=True)
class PointConfig:
    """Distinct integer points, optionally checked against a reference polytope."""

    points: tuple
    polytope: LatticePolytope | None = None

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points in configuration")
        object.__setattr__(self, "points", pts)

    @property
    def admissible(self) -> bool:
        if self.polytope is None:
            return True
        return set(self.polytope.vertices) <= set(self.points)


@dataclass(frozen=True)
class Triangulation:
    points: tuple
    simplices: tuple
    heights: tuple | None = None

    @property
    def dim(self) -> int:
        return len(self.simplices[0]) - 1

    def volumes(self) -> list[int]:
        return [simplex_volume([self.points[i] for i in s]) for s in self.simplices]


# -- placing ---------------------------------------------------------------


class _Placing:
    """Incremental placing triangulation of points added in lexicographic order.

    ``coords`` must be integer coordinates in which the full configuration is
    full-dimensional (see :func:`_affine_coordinates`).
    """

    def __init__(self, coords):
        self.coords = coords
        self.k = next((len(c) for c in coords if c is not None), 0)
        self.simplices: list[tuple[int, ...]] = []
        self.boundary: dict[tuple, tuple] = {}
        self._inv: dict[tuple, tuple] = {}

    def _bary(self, s, q):
        """Barycentric coordinates of point ``q`` as ``(numerators, den)``, den > 0."""
        c = self.coords
        if len(s) == self.k + 1:
            got = self._inv.get(s)
            if got is None:
                m = [[c[j][i] for j in s] for i in range(self.k)] + [[1] * len(s)]
                got = self._inv[s] = _qla.adjugate_det(m)
            num, den = got
            vec = c[q] + (1,)
            return [sum(a * b for a, b in zip(row, vec)) for row in num], den
        lam = _qla.barycentric([c[j] for j in s], c[q])
        if lam is None:
            return None
        den = math.lcm(*(x.denominator for x in lam))
        return [int(x * den) for x in lam], den

    def _rebuild_boundary(self):
        count: dict[tuple, list] = {}
        for s in self.simplices:
            for o in s:
                count.setdefault(tuple(sorted(i for i in s if i != o)), []).append((s, o))
        self.boundary = {f: v[0] for f, v in count.items() if len(v) == 1}

    def add(self, p: int):
        """Insert point ``p``; returns the convexity constraints on its height.

        Each constraint is ``(alpha, beta)`` meaning
        ``alpha * h[p] + sum(beta_i * h[i]) > 0`` with ``beta`` a dict.
        """
        if not self.simplices:
            self.simplices = [(p,)]
            return []
        if self._bary(self.simplices[0], p) is None:
            self.simplices = [tuple(sorted(s + (p,))) for s in self.simplices]
            self._rebuild_boundary()
            return []
        constraints = []
        new = []
        for f, (s, o) in self.boundary.items():
            nums, den = self._bary(s, p)
            if nums[s.index(o)] >= 0:
                continue
            new.append(tuple(sorted(f + (p,))))
            # p lifted above the affine extension of the lift on s
            constraints.append((Fraction(1), {i: Fraction(-nums[k], den) for k, i in enumerate(s)}))
        # walls between two new simplices
        by_ridge: dict[tuple, list] = {}
        for t in new:
            for o in t:
                if o != p:
                    by_ridge.setdefault(tuple(i for i in t if i != o), []).append((t, o))
        for items in by_ridge.values():
            if len(items) != 2:
                continue
            (t1, _), (_, o2) = items
            nums, den = self._bary(t1, o2)
            beta = {o2: Fraction(1)}
            alpha = Fraction(0)
            for k, i in enumerate(t1):
                if i == p:
                    alpha -= Fraction(nums[k], den)
                else:
                    beta[i] = beta.get(i, 0) - Fraction(nums[k], den)
            constraints.append((alpha, beta))
        for t in new:
            for o in t:
                f = tuple(i for i in t if i != o)
                if f in self.boundary:
                    del self.boundary[f]
                else:
                    self.boundary[f] = (t, o)
        self.simplices.extend(new)
        return constraints


def _height_for(constraints, heights):
    """Smallest integer height satisfying every ``(alpha, beta)`` constraint strictly."""
    lo = None
    for alpha, beta in constraints:
        rest = sum(b * heights[i] for i, b in beta.items())
        if alpha > 0:
            bound = -rest / alpha
            lo = bound if lo is None else max(lo, bound)
        elif alpha < 0:
            raise AssertionError("placing produced an upper bound on a new height")
        elif rest <= 0:
            raise AssertionError("placing produced an unsatisfiable wall")
    return 0 if lo is None else math.floor(lo) + 1


def regular_fine_triangulation(cfg: PointConfig) -> Triangulation:
    """Placing triangulation using every point, with its lifting heights."""
    if not cfg.admissible:
        raise NotAdmissible("configuration misses vertices of its polytope")
    pts = cfg.points
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    placing = _Placing(_affine_coordinates(pts))
    heights: list = [0] * len(pts)
    for p in order:
        heights[p] = _height_for(placing.add(p), heights)
    simplices = tuple(sorted(placing.simplices))
    return Triangulation(pts, simplices, tuple(heights))


# -- verification ------------------------------------------------------------


def _affine_coordinates(points):
    """Points in integer coordinates of their affine span's lattice."""
    from .lattice_core import saturation

    p0 = points[0]
    diffs = [tuple(x - y for x, y in zip(p, p0)) for p in points]
    basis = saturation([d for d in diffs if any(d)], len(p0))
    if not basis:
        return [()] * len(points)
    cols = [list(c) for c in zip(*basis)]
    out = []
    for d in diffs:
        x = _qla.solve(cols, list(d))
        out.append(tuple(int(c) for c in x))
    return out


def _wall_constraints(t: Triangulation):
    """Linear conditions ``sum(coef_i * h_i) > 0`` for a strictly convex lift.

    Also checks that the simplices form a triangulation of the hull and
    raises MalformedTriangulation otherwise.
    """
    pts = t.points
    k = len(t.simplices[0]) - 1
    coords = _affine_coordinates(pts)
    if any(len(s) != k + 1 or len(set(s)) != k + 1 for s in t.simplices):
        raise MalformedTriangulation("simplices of mixed size or with repeated vertices")
    if k == 0:
        if len(t.simplices) != 1:
            raise MalformedTriangulation("overlapping 0-simplices")
        return []
    if len(coords[0]) != k:
        raise MalformedTriangulation("simplices do not span the configuration")
    vols = [abs(_det_of(coords, s)) for s in t.simplices]
    if any(v == 0 for v in vols):
        raise MalformedTriangulation("degenerate simplex")
    used = sorted({i for s in t.simplices for i in s})
    box = hull([coords[i] for i in range(len(pts))])
    if sum(vols) != box.volume:
        raise MalformedTriangulation(
            f"simplex volumes sum to {sum(vols)}, hull volume is {box.volume}"
        )
    walls: dict[tuple, list] = {}
    for s in t.simplices:
        for o in s:
            walls.setdefault(tuple(sorted(i for i in s if i != o)), []).append((s, o))
    rows = []
    for f, items in walls.items():
        if len(items) > 2:
            raise MalformedTriangulation(f"wall {f} lies in {len(items)} simplices")
        if len(items) == 1:
            on_boundary = any(
                all(box.facet_value(j, coords[i]) == 0 for i in f) for j in range(len(box.facets))
            )
            if not on_boundary:
                raise MalformedTriangulation(f"wall {f} is exposed inside the hull")
            continue
        (s1, o1), (_, o2) = items
        mu = _qla.barycentric([coords[i] for i in s1], coords[o2])
        if mu[s1.index(o1)] >= 0:
            raise MalformedTriangulation(f"simplices overlap across wall {f}")
        row = {o2: Fraction(1)}
        for kk, i in enumerate(s1):
            row[i] = row.get(i, 0) - mu[kk]
        rows.append(row)
    # unused points must lie strictly above the lift
    for q in set(range(len(pts))) - set(used):
        for s in t.simplices:
            mu = _qla.barycentric([coords[i] for i in s], coords[q])
            if all(x >= 0 for x in mu):
                row = {q: Fraction(1)}
                for kk, i in enumerate(s):
                    row[i] = row.get(i, 0) - mu[kk]
                rows.append(row)
                break
    return rows


def _det_of(coords, s):
    from .lattice_core import determinant

    v0 = coords[s[0]]
    return determinant([tuple(x - y for x, y in zip(coords[i], v0)) for i in s[1:]])


def check_heights(t: Triangulation, heights) -> bool:
    return all(sum(c * heights[i] for i, c in row.items()) > 0 for row in _wall_constraints(t))


def verify_regularity(t: Triangulation) -> tuple[bool, tuple | None]:
    """Decide regularity exactly; returns ``(True, heights)`` or ``(False, None)``.

    Stored heights are re-checked first.  Otherwise an exact rational LP
    maximizes a margin ``m <= 1`` subject to every wall condition being at
    least ``m``; the triangulation is regular iff the optimum is positive.
    """
    rows = _wall_constraints(t)
    if t.heights is not None and all(
        sum(c * t.heights[i] for i, c in row.items()) > 0 for row in rows
    ):
        return True, tuple(t.heights)
    npts = len(t.points)
    if not rows:
        return True, tuple([0] * npts)
    from sympy import Rational
    from sympy.solvers.simplex import linprog

    a = []
    for row in rows:
        line = [Rational(0)] * (npts + 1)
        for i, c in row.items():
            line[i] = -Rational(c.numerator, c.denominator)
        line[npts] = Rational(1)
        a.append(line)
    cost = [0] * npts + [-1]
    bounds = [(None, None)] * npts + [(None, 1)]
    opt, sol = linprog(cost, a, [0] * len(rows), bounds=bounds)
    margin = -opt
    if margin <= 0:
        return False, None
    hs = [Fraction(str(x)) for x in sol[:npts]]
    den = math.lcm(*(h.denominator for h in hs))
    heights = tuple(int(h * den) for h in hs)
    assert all(sum(c * heights[i] for i, c in row.items()) > 0 for row in rows)
    return True, heights


# -- elementary counts and MPCP fans -------------------------------------------


def count_elementary(p: LatticePolytope, face: Face) -> int:
    """Number of elementary simplices in a maximal triangulation of a face.

    Only faces of dimension at most 2 are supported; there every elementary
    simplex is unimodular, so the count equals the face's normalized volume.
    """
    if face.dim >= 3:
        raise DimensionTooHigh("elementary simplex counts depend on the triangulation for dim >= 3")
    pts = p.face_points(face)
    if face.dim == 0:
        return 1
    t = regular_fine_triangulation(PointConfig(tuple(pts)))
    count = sum(1 for v in t.volumes() if v == 1)
    assert count == len(t.simplices) == p.face_volume(face)
    return count


@dataclass(frozen=True)
class MPCPResult:
    fan: Fan
    reports: dict
    heights: tuple  # integer support-function values on the rays


def mpcp_fan(p: LatticePolytope) -> MPCPResult:
    """Projective simplicial refinement of the face fan of ``p`` using all boundary points.

    Each facet is triangulated by placing in one global lexicographic order,
    so triangulations agree on shared faces.  The returned heights are the
    values of a strictly convex support function on the rays.
    """
    if not is_reflexive(p).reflexive:
        raise NotReflexive("MPCP refinement needs a reflexive polytope")
    n = p.dim
    origin = tuple([0] * n)
    rays = sorted(q for q in p.points if q != origin)
    index = {q: i for i, q in enumerate(rays)}
    fl = p.face_lattice
    facets = fl.by_dim[n - 1]
    facet_points = {f.id: [index[q] for q in p.face_points(f)] for f in facets}
    placings = {}
    for f in facets:
        idxs = facet_points[f.id]
        local = _affine_coordinates([rays[i] for i in idxs])
        coords = [None] * len(rays)
        for i, c in zip(idxs, local):
            coords[i] = c
        placings[f.id] = _Placing(coords)
    containing: dict[int, list[int]] = {}
    for fid, idxs in facet_points.items():
        for i in idxs:
            containing.setdefault(i, []).append(fid)
    g: list = [0] * len(rays)
    for i in range(len(rays)):  # rays are already in lexicographic order
        cons = []
        for fid in containing[i]:
            cons.extend(placings[fid].add(i))
        g[i] = _height_for(cons, g)
    maximal = sorted({s for pl in placings.values() for s in pl.simplices})
    walls = _fan_walls(rays, maximal)
    # psi = K + g: walls inside a facet are strict through g alone, walls
    # across facets gain K * (1 - <k_sigma, b>) > 0
    need = Fraction(0)
    for b, mu in walls:
        drop = 1 - sum(mu.values())
        slack = g[b] - sum(m * g[i] for i, m in mu.items())
        if drop == 0:
            if slack <= 0:
                raise AssertionError("facet triangulation is not regular")
        else:
            need = max(need, -slack / drop)
    big_k = math.floor(need) + 1
    psi = tuple(big_k + x for x in g)
    for b, mu in walls:
        assert psi[b] - sum(m * psi[i] for i, m in mu.items()) > 0
    cones = set()
    for s in maximal:
        for r in range(len(s) + 1):
            cones.update(frozenset(c) for c in itertools.combinations(s, r))
    fan = Fan(rays, cones, n)
    reports = {frozenset(s): classify_cone(fan.cone(s)) for s in maximal}
    for s, rep in reports.items():
        assert rep.simplicial and rep.terminal and rep.gorenstein, (s, rep)
        assert all(dot(rep.k_sigma, rays[i]) == 1 for i in s)
    return MPCPResult(fan, reports, psi)


def _fan_walls(rays, maximal):
    """``(b, mu)`` per interior wall: ``rays[b] = sum(mu_i * rays[i])`` over the other cone."""
    by_wall: dict[tuple, list] = {}
    for s in maximal:
        for o in s:
            by_wall.setdefault(tuple(sorted(i for i in s if i != o)), []).append((s, o))
    out = []
    for w, items in by_wall.items():
        if len(items) != 2:
            raise AssertionError(f"fan wall {w} is not shared by exactly two cones")
        (s1, _), (_, o2) = items
        cols = [[rays[i][r] for i in s1] for r in range(len(rays[0]))]
        mu = _qla.solve(cols, list(rays[o2]))
        out.append((o2, {i: m for i, m in zip(s1, mu)}))
    return out


def singularity_summary(reports: dict) -> SingularityReport:
    """Conjunction of flags over a collection of cone reports."""
    reps = list(reports.values())
    return SingularityReport(
        simplicial=all(r.simplicial for r in reps),
        gorenstein=all(r.gorenstein for r in reps),
        terminal=all(r.terminal for r in reps),
        canonical=all(r.canonical for r in reps),
        smooth=all(r.smooth for r in reps),
        q_gorenstein=all(r.q_gorenstein for r in reps),
    )
