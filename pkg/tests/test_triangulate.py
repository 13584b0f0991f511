import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import QUINTIC_DUAL, cube, polygon_catalog, threefold_catalog
from reflexive.errors import (
    DimensionTooHigh,
    MalformedTriangulation,
    NotAdmissible,
    NotFullDimensional,
    NotReflexive,
)
from reflexive.lattice_core import dot
from reflexive.polytope import hull
from reflexive.toric_fan import face_fan
from reflexive.triangulate import (
    PointConfig,
    Triangulation,
    check_heights,
    count_elementary,
    mpcp_fan,
    regular_fine_triangulation,
    verify_regularity,
)


def test_segment():
    t = regular_fine_triangulation(PointConfig(((-1,), (0,), (1,))))
    assert sorted(sorted(t.points[i][0] for i in s) for s in t.simplices) == [[-1, 0], [0, 1]]
    assert verify_regularity(t)[0]


def test_square_with_all_points():
    sq = cube(2)
    t = regular_fine_triangulation(PointConfig(sq.points, sq))
    assert len(t.simplices) == 8
    assert all(v == 1 for v in t.volumes())
    ok, hs = verify_regularity(t)
    assert ok and check_heights(t, hs)


@pytest.mark.parametrize("diagonal", [(0, 2), (1, 3)])
def test_both_quadrilateral_diagonals_are_regular(diagonal):
    pts = ((0, 0), (3, 0), (2, 2), (0, 1))
    a, b = diagonal
    others = [i for i in range(4) if i not in diagonal]
    t = Triangulation(pts, tuple((a, b, o) for o in others))
    ok, hs = verify_regularity(t)
    assert ok and check_heights(t, hs)


def test_twisted_triangulation_is_not_regular():
    A, B, C, a, b, c = range(6)
    pts = ((0, 0), (12, 0), (6, 12), (3, 2), (9, 2), (6, 8))
    simplices = ((a, b, c), (A, B, a), (B, b, a), (B, C, b), (C, c, b), (C, A, c), (A, a, c))
    ok, hs = verify_regularity(Triangulation(pts, simplices))
    assert not ok and hs is None
    # flipping one diagonal makes it regular
    flipped = ((a, b, c), (A, B, b), (A, b, a), (B, C, b), (C, c, b), (C, A, c), (A, a, c))
    assert verify_regularity(Triangulation(pts, flipped))[0]


def test_corrupted_triangulations_are_rejected():
    sq = cube(2)
    t = regular_fine_triangulation(PointConfig(sq.points, sq))
    overlapping = Triangulation(t.points, t.simplices[:-1] + (t.simplices[0],))
    with pytest.raises(MalformedTriangulation):
        verify_regularity(overlapping)
    pts = ((0, 0), (2, 0), (0, 2), (2, 2))
    crossing = Triangulation(pts, ((0, 1, 2), (1, 2, 3), (0, 1, 3)))
    with pytest.raises(MalformedTriangulation):
        verify_regularity(crossing)
    gap = Triangulation(pts, ((0, 1, 2),))
    with pytest.raises(MalformedTriangulation):
        verify_regularity(gap)


def test_inadmissible_configuration():
    sq = cube(2)
    with pytest.raises(NotAdmissible):
        regular_fine_triangulation(PointConfig(((0, 0), (1, 1), (1, -1), (-1, 1)), sq))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 3))
def test_volume_conservation_and_certificates(seed, dim):
    rng = random.Random(seed)
    pts = {tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(rng.randint(dim + 1, 12))}
    pts = sorted(pts)
    try:
        h = hull(pts)
    except NotFullDimensional:
        return
    t = regular_fine_triangulation(PointConfig(tuple(pts), h))
    assert sum(t.volumes()) == h.volume
    assert {i for s in t.simplices for i in s} == set(range(len(pts)))
    assert check_heights(t, t.heights)
    ok, hs = verify_regularity(t)
    assert ok and check_heights(t, hs)


@pytest.mark.parametrize("p", polygon_catalog()[::3] + threefold_catalog()[::7],
                         ids=lambda p: str(len(p.vertices)))
def test_fine_triangulations_of_lattice_points_are_elementary(p):
    t = regular_fine_triangulation(PointConfig(p.points, p))
    assert sum(t.volumes()) == p.volume
    for s in t.simplices:
        simplex = hull([t.points[i] for i in s])
        assert len(simplex.points) == len(s)


def test_count_elementary():
    p = hull([(-1, -1), (2, -1), (-1, 2)])
    for e in p.face_lattice.by_dim[1]:
        assert count_elementary(p, e) == 3 == p.face_volume(e)
        # Hirzebruch-Jung chain: interior points of the edge
        assert p.l_star(e) == p.face_volume(e) - 1
    c = cube(3)
    for f in c.face_lattice.by_dim[2]:
        assert count_elementary(c, f) == c.face_volume(f) == 8
    q = hull(QUINTIC_DUAL).polar_dual
    with pytest.raises(DimensionTooHigh):
        count_elementary(q, q.face_lattice.by_dim[3][0])


def test_count_elementary_matches_dual_face_degree():
    # for reflexive 3-polytopes, elementary triangles on a 2-face are counted
    # by its degree, and the dual edge carries d - 1 interior points
    for p in threefold_catalog()[::6]:
        d = p.polar_dual
        fl, dl = p.face_lattice, d.face_lattice
        for f in fl.by_dim[2]:
            assert count_elementary(p, f) == p.face_volume(f)
        for e in fl.by_dim[1]:
            g = fl.dual_face(e, dl)
            assert count_elementary(d, g) == d.face_volume(g)
            assert d.l_star(g) == d.face_volume(g) - 1


def test_mpcp_of_projective_space(quintic_dual):
    res = mpcp_fan(quintic_dual)
    assert len(res.fan.rays) == 5
    assert res.fan == face_fan(quintic_dual)
    assert all(r.smooth for r in res.reports.values())


def test_mpcp_hirzebruch():
    res = mpcp_fan(hull([(1, 0), (0, 1), (-1, -2)]))
    assert len(res.fan.rays) == 4 and (0, -1) in res.fan.rays
    assert len(res.reports) == 4
    assert all(r.smooth for r in res.reports.values())


def test_mpcp_quintic(quintic):
    res = mpcp_fan(quintic)
    assert len(res.fan.rays) == 125
    assert set(res.fan.rays) == {x for x in quintic.points if any(x)}
    assert len(res.reports) == quintic.volume
    for c, rep in res.reports.items():
        assert rep.simplicial and rep.gorenstein and rep.terminal
        assert all(dot(rep.k_sigma, res.fan.rays[i]) == 1 for i in c)


@pytest.mark.parametrize("p", polygon_catalog() + threefold_catalog()[::4],
                         ids=lambda p: str(len(p.vertices)))
def test_mpcp_properties(p):
    res = mpcp_fan(p)
    assert set(res.fan.rays) == {x for x in p.points if any(x)}
    assert res.fan.is_complete
    for c, rep in res.reports.items():
        assert rep.simplicial and rep.terminal and rep.gorenstein
        assert all(dot(rep.k_sigma, res.fan.rays[i]) == 1 for i in c)
        if p.dim == 2:
            assert rep.smooth
    # the support function is strictly convex: it never lies below the
    # linear function of a cone at rays outside that cone
    psi = res.heights
    for c, rep in list(res.reports.items())[:20]:
        idx = sorted(c)
        from reflexive import _qla
        m = _qla.solve([list(res.fan.rays[i]) for i in idx], [psi[i] for i in idx])
        for j, r in enumerate(res.fan.rays):
            if j not in c:
                assert psi[j] > sum(a * b for a, b in zip(m, r))


def test_mpcp_needs_reflexive():
    with pytest.raises(NotReflexive):
        mpcp_fan(hull([(2, 0), (0, 2), (-2, -2)]))
