"""Hodge numbers, Picard numbers and Euler characteristics from face data.

Everything here is evaluated from the face lattices of a reflexive polytope
and its polar dual; no triangulation is involved.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import (
    DimensionBelowFour,
    DimensionNotFour,
    InvariantViolation,
    NotFullDimensional,
    NotReflexive,
)
from .polytope import LatticePolytope, is_reflexive, lattice_points


def _require_reflexive(p: LatticePolytope) -> LatticePolytope:
    w = is_reflexive(p)
    if not w.reflexive:
        raise NotReflexive(f"polytope is not reflexive: {w.reason}")
    return p.polar_dual


def _require_dim4plus(p: LatticePolytope):
    if p.dim < 4:
        raise DimensionBelowFour(f"Hodge formulas need n >= 4, got n = {p.dim}")


def _facet_interior_sum(p: LatticePolytope) -> int:
    return sum(p.l_star(f) for f in p.face_lattice.by_dim[p.dim - 1])


def _codim2_correction(p: LatticePolytope, dual: LatticePolytope) -> int:
    fl, dfl = p.face_lattice, dual.face_lattice
    total = 0
    for f in fl.by_dim[p.dim - 2]:
        total += p.l_star(f) * dual.l_star(fl.dual_face(f, dfl))
    return total


def _string_h21(p: LatticePolytope, dual: LatticePolytope) -> int:
    n = p.dim
    l = lattice_points(p)[1]
    return l - n - 1 - _facet_interior_sum(p) + _codim2_correction(p, dual)


def hodge_h21(p: LatticePolytope) -> int:
    """``h^{n-2,1}`` of the MPCP-resolved Calabi-Yau hypersurface for ``p``."""
    dual = _require_reflexive(p)
    _require_dim4plus(p)
    return _string_h21(p, dual)


def hodge_h11(p: LatticePolytope) -> int:
    """``h^{1,1}``: the same expression evaluated on the dual polytope."""
    dual = _require_reflexive(p)
    _require_dim4plus(p)
    return _string_h21(dual, p)


def picard_toric(p: LatticePolytope) -> int:
    """Picard number of an MPCP resolution of the ambient toric Fano variety."""
    dual = _require_reflexive(p)
    return lattice_points(dual)[1] - p.dim - 1


def hodge_h_n20(p: LatticePolytope) -> int:
    """Sum of interior point counts over the facets of ``p``."""
    _require_reflexive(p)
    _require_dim4plus(p)
    return _facet_interior_sum(p)


def affine_euler(p: LatticePolytope) -> int:
    """Euler characteristic ``(-1)^(n-1) d(p)`` of the affine hypersurface."""
    if p.dim != len(p.vertices[0]):
        raise NotFullDimensional("polytope is not full-dimensional")
    return (-1) ** (p.dim - 1) * p.volume


def affine_h21(p: LatticePolytope) -> int:
    _require_reflexive(p)
    _require_dim4plus(p)
    return lattice_points(p)[1] - p.dim - 1 - _facet_interior_sum(p)


def affine_invariants(p: LatticePolytope) -> tuple[int, int | None]:
    """``(euler, h21_affine)``; the second entry is None when p is not reflexive or n < 4."""
    e = affine_euler(p)
    if p.dim < 4 or not is_reflexive(p).reflexive:
        return e, None
    return e, affine_h21(p)


def euler_from_faces(p: LatticePolytope) -> int:
    """Edge / 2-face sum of ``d(face) * d(dual face)`` for a reflexive 4-polytope."""
    dual = _require_reflexive(p)
    if p.dim != 4:
        raise DimensionNotFour(f"the 3-fold Euler formula needs n = 4, got n = {p.dim}")
    fl, dfl = p.face_lattice, dual.face_lattice

    def term(d):
        return sum(p.face_volume(f) * dual.face_volume(fl.dual_face(f, dfl)) for f in fl.by_dim[d])

    return term(1) - term(2)


def euler_cy3(p: LatticePolytope) -> int:
    """Euler number of the Calabi-Yau 3-fold, cross-checked against ``2 (h11 - h21)``."""
    e = euler_from_faces(p)
    via_hodge = 2 * (hodge_h11(p) - hodge_h21(p))
    if e != via_hodge:
        raise InvariantViolation(f"face-sum Euler {e} != 2 (h11 - h21) = {via_hodge}")
    return e


@dataclass(frozen=True)
class HodgeReport:
    n: int
    h11: int
    h_n21: int
    h_n20: int
    picard_toric: int
    affine_euler: int
    affine_h21: int
    euler_cy3: int | None = None

    def as_dict(self):
        return asdict(self)


def hodge_report(p: LatticePolytope) -> HodgeReport:
    _require_reflexive(p)
    _require_dim4plus(p)
    rep = HodgeReport(
        n=p.dim,
        h11=hodge_h11(p),
        h_n21=hodge_h21(p),
        h_n20=hodge_h_n20(p),
        picard_toric=picard_toric(p),
        affine_euler=affine_euler(p),
        affine_h21=affine_h21(p),
        euler_cy3=euler_cy3(p) if p.dim == 4 else None,
    )
    return rep


def mirror_report(p: LatticePolytope) -> tuple[HodgeReport, HodgeReport]:
    """Reports for ``p`` and its dual, with the mirror exchanges asserted."""
    if p.dim != 4:
        raise DimensionNotFour(f"mirror report is for n = 4, got n = {p.dim}")
    a = hodge_report(p)
    b = hodge_report(p.polar_dual)
    if not (a.h11 == b.h_n21 and a.h_n21 == b.h11 and a.euler_cy3 == -b.euler_cy3):
        raise InvariantViolation(f"mirror relations fail: {a} vs {b}")
    return a, b
