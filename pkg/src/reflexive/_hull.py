"""Exact convex hulls by the double description method.

The cone generated by a set of integer vectors is converted to its facet
description by incrementally intersecting the polar cone with one halfspace
per generator.  Adjacency of extreme rays uses the combinatorial test, so
degenerate (non-simplicial) inputs need no perturbation.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import _qla
from .lattice_core import dot, primitive, vec_gcd
from .errors import NotFullDimensional


def _independent_subset(gens):
    chosen = []
    basis = []
    for i, g in enumerate(gens):
        if _qla.rank(basis + [g]) > len(basis):
            basis.append(g)
            chosen.append(i)
    return chosen


def cone_facets(gens):
    """Inner facet normals of the cone spanned by ``gens``.

    ``gens`` must span the whole space.  Returns primitive integer vectors
    ``u`` with ``u . g >= 0`` for every generator, one per facet.
    """
    gens = [tuple(g) for g in gens]
    d = len(gens[0])
    init = _independent_subset(gens)
    if len(init) != d:
        raise NotFullDimensional(f"generators span rank {len(init)} < {d}")
    # columns of the inverse of the initial basis are the polar's rays
    g0 = [list(gens[i]) for i in init]
    rays = []
    for j in range(d):
        e = [int(i == j) for i in range(d)]
        col = _qla.solve(g0, e)
        den = lcm(*(x.denominator for x in col))
        u = primitive([int(x * den) for x in col])
        tight = frozenset(init[i] for i in range(d) if i != j)
        rays.append((u, tight))
    done = set(init)
    for idx, g in enumerate(gens):
        if idx in done:
            continue
        done.add(idx)
        vals = [dot(u, g) for u, _ in rays]
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        if not neg:
            rays = [(u, t | {idx}) if vals[k] == 0 else (u, t) for k, (u, t) in enumerate(rays)]
            continue
        new = []
        for k, (u, t) in enumerate(rays):
            if vals[k] > 0:
                new.append((u, t))
            elif vals[k] == 0:
                new.append((u, t | {idx}))
        for p in pos:
            up, tp = rays[p]
            for q in neg:
                uq, tq = rays[q]
                common = tp & tq
                if len(common) < d - 2:
                    continue
                if any(
                    r != p and r != q and common <= tr for r, (_, tr) in enumerate(rays)
                ):
                    continue
                sp, sq = vals[p], vals[q]
                w = primitive([sp * b - sq * a for a, b in zip(up, uq)])
                new.append((w, common | {idx}))
        rays = new
    return [u for u, _ in rays]


def homogenize(points):
    """Rational points -> integer vectors ``(den, den * p)``."""
    out = []
    for p in points:
        den = lcm(*(Fraction(x).denominator for x in p)) if p else 1
        out.append(tuple([den] + [int(Fraction(x) * den) for x in p]))
    return out


def hull(points):
    """Facets and vertices of the convex hull of full-dimensional ``points``.

    Returns ``(vertex_indices, facets)`` where each facet is
    ``(normal, offset)`` with ``normal`` a primitive integer vector and
    ``<x, normal> >= -offset`` on the hull.  ``offset`` is a Fraction (an
    integer for lattice inputs).
    """
    n = len(points[0])
    if _qla.affine_rank(points) != n:
        raise NotFullDimensional(
            f"points span an affine space of dimension {_qla.affine_rank(points)} < {n}"
        )
    normals = cone_facets(homogenize(points))
    facets = []
    for u in normals:
        a = u[1:]
        g = vec_gcd(a)
        facets.append((tuple(x // g for x in a), Fraction(u[0], g)))
    facets = sorted(set(facets))
    verts = []
    for i, p in enumerate(points):
        tight = [a for a, c in facets if sum(Fraction(x) * y for x, y in zip(p, a)) + c == 0]
        if len(tight) >= n and _qla.rank(tight) == n:
            verts.append(i)
    return verts, facets
