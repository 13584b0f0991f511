"""Exhaustive classification of reflexive polytopes in low dimension.

Classes are grown from minimal lattice configurations with the origin as
their only interior point: each step adds one lattice point of a bounded box and keeps
the hull when the origin is still its only interior lattice point.  Classes
are deduplicated by normal form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _qla
from .errors import NotFullDimensional, UnsupportedDimension
from .lattice_core import IntMatrix, integer_kernel, transpose
from .pairs import pair_fundamental_group, polytope_fundamental_group, vertex_sublattice
from .polytope import LatticePolytope, hull, is_reflexive, lattice_points, normal_form

BOX_RADIUS = 4
SEED_RADIUS = 2


@dataclass(frozen=True)
class ClassificationResult:
    dim: int
    normal_forms: tuple[IntMatrix, ...]
    representatives: tuple[LatticePolytope, ...]
    duals: tuple[int, ...]

    def __len__(self):
        return len(self.normal_forms)

    def polytope(self, i: int) -> LatticePolytope:
        return self.representatives[i]


def _only_origin_inside(points, origin) -> LatticePolytope | None:
    try:
        p = hull(points)
    except NotFullDimensional:
        return None
    if not p.origin_interior:
        return None
    pts, _, l_star = lattice_points(p)
    if l_star != 1:
        return None
    return p


def _circuits(box, m):
    """Point sets of size ``m + 1`` spanning rank ``m`` with 0 in their relative interior."""
    for pts in itertools.combinations(box, m + 1):
        if _qla.rank(pts) != m:
            continue
        ker = integer_kernel(transpose(pts), ncols=m + 1)
        w = ker[0]
        if all(x > 0 for x in w) or all(x < 0 for x in w):
            yield pts


def _compositions(d):
    if d == 0:
        yield ()
        return
    for first in range(1, d + 1):
        for rest in _compositions(d - first):
            if not rest or first >= rest[0]:
                yield (first,) + rest


def _seeds(dim: int):
    """Minimal configurations with the origin inside.

    Such a configuration is a union of circuits whose linear spans form a
    direct sum; for polygons these are triangles and pairs of crossing
    segments.
    """
    rng = range(-SEED_RADIUS, SEED_RADIUS + 1)
    origin = (0,) * dim
    box = [x for x in itertools.product(rng, repeat=dim) if any(x)]
    circuits = {m: list(_circuits(box, m)) for m in range(1, dim + 1)}
    seen = set()
    for parts in _compositions(dim):
        for combo in itertools.product(*(circuits[m] for m in parts)):
            pts = [x for c in combo for x in c]
            if _qla.rank(pts) != dim:
                continue
            p = _only_origin_inside(pts, origin)
            if p is None:
                continue
            nf = normal_form(p)
            if nf not in seen:
                seen.add(nf)
                yield nf, p


def _grow(dim: int):
    rng = range(-BOX_RADIUS, BOX_RADIUS + 1)
    origin = (0,) * dim
    box = list(itertools.product(rng, repeat=dim))
    found: dict[IntMatrix, LatticePolytope] = {}
    queue = []
    for nf, p in _seeds(dim):
        found[nf] = p
        queue.append(p)
    while queue:
        p = queue.pop()
        for x in box:
            if p.contains(x):
                continue
            q = _only_origin_inside(list(p.vertices) + [x], origin)
            if q is None:
                continue
            nf = normal_form(q)
            if nf not in found:
                found[nf] = q
                queue.append(q)
    return found


def enumerate_reflexive(dim: int = 2, allow_long: bool = False) -> ClassificationResult:
    """All reflexive polytopes of dimension ``dim`` up to lattice equivalence.

    Dimension 2 takes a few seconds.  Dimension 3 is implemented by the same
    search but is very slow and needs ``allow_long=True``.
    """
    if dim not in (2, 3) or (dim == 3 and not allow_long):
        raise UnsupportedDimension(
            f"classification is available for dim 2 (dim 3 with allow_long), not {dim}"
        )
    found = _grow(dim)
    reflexive = {nf: p for nf, p in found.items() if is_reflexive(p).reflexive}
    if dim == 2:
        # one interior point forces reflexivity for polygons
        assert len(reflexive) == len(found)
    nfs = sorted(reflexive)
    reps = [reflexive[nf] for nf in nfs]
    index = {nf: i for i, nf in enumerate(nfs)}
    duals = []
    for p in reps:
        dnf = normal_form(p.polar_dual)
        assert dnf in index, "dual class missing from the classification"
        duals.append(index[dnf])
    assert all(duals[duals[i]] == i for i in range(len(duals)))
    return ClassificationResult(dim, tuple(nfs), tuple(reps), tuple(duals))


def maximal_polygons() -> list[LatticePolytope]:
    """The three reflexive polygons that are maximal under inclusion."""
    return [
        hull([(-1, -1), (2, -1), (-1, 2)]),
        hull([(-1, -1), (3, -1), (-1, 1)]),
        hull([(-1, -1), (1, -1), (-1, 1), (1, 1)]),
    ]


def oracle_polygons() -> set[IntMatrix]:
    """Normal forms of all sub-polygons of the maximal polygons containing 0 inside.

    Independent of the growth search; a sub-polygon of a reflexive polygon
    with 0 interior has 0 as its only interior lattice point.
    """
    out = set()
    for big in maximal_polygons():
        boundary = [x for x in big.points if any(x)]
        for k in range(3, len(boundary) + 1):
            for sub in itertools.combinations(boundary, k):
                p = _only_origin_inside(sub, (0, 0))
                if p is not None and set(p.vertices) == set(sub):
                    out.add(normal_form(p))
    return out


@dataclass(frozen=True)
class CatalogRow:
    index: int
    normal_form: IntMatrix
    vertices: int
    l: int
    l_star: int
    boundary: int
    volume: int
    facet_volume_sum: int
    dual: int
    dual_boundary: int
    pi1_order: int
    pair_pi1_order: int
    vertex_index: int


def catalog_invariants(result: ClassificationResult) -> list[CatalogRow]:
    rows = []
    for i, (nf, p) in enumerate(zip(result.normal_forms, result.representatives)):
        _, l, l_star = lattice_points(p)
        dual = p.polar_dual
        _, dl, dl_star = lattice_points(dual)
        fl = p.face_lattice
        facet_sum = sum(p.face_volume(f) for f in fl.by_dim[p.dim - 1])
        rows.append(CatalogRow(
            index=i,
            normal_form=nf,
            vertices=len(p.vertices),
            l=l,
            l_star=l_star,
            boundary=l - l_star,
            volume=p.volume,
            facet_volume_sum=facet_sum,
            dual=result.duals[i],
            dual_boundary=dl - dl_star,
            pi1_order=polytope_fundamental_group(p)[1],
            pair_pi1_order=pair_fundamental_group(p).order,
            vertex_index=vertex_sublattice(p)[1],
        ))
    return rows
