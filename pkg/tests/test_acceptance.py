"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (with its wall time and budget) that is
printed in the terminal summary, then asserts.  All comparisons are exact
integer or rational equalities; the only tolerances are the time budgets.
"""

import math
import random
import time
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from conftest import (
    ACCEPTANCE_LINES,
    QUINTIC,
    QUINTIC_DUAL,
    cross_polytope,
    cube,
    oracle_degree_tuples,
    polygon_catalog,
    random_unimodular,
    threefold_catalog,
    transform,
)
from reflexive import _qla
from reflexive.classify import enumerate_reflexive
from reflexive.cli_io import parse_polytope_text, serialize_points
from reflexive.invariants import euler_cy3, hodge_h11, hodge_h21, hodge_h_n20
from reflexive.lattice_core import dot, smith_normal_form
from reflexive.pairs import (
    _character_kernel_group,
    enumerate_degree_tuples,
    fermat_group,
    morphism_check,
    pair_fundamental_group,
    polytope_fundamental_group,
    simplex_weights,
    weighted_simplex,
)
from reflexive.polytope import hull, is_reflexive, lattice_points, normal_form
from reflexive.triangulate import PointConfig, mpcp_fan, regular_fine_triangulation, verify_regularity

BUDGET_QUINTIC = 1.0
BUDGET_MIRROR = 5.0
BUDGET_CLASSIFY = 30.0
BUDGET_MPCP = 5.0
BUDGET_WEIGHTS = 5.0
BUDGET_PROPERTIES = 60.0

PHI = [(4, -1, -1, -1), (-1, 4, -1, -1), (-1, -1, 4, -1), (-1, -1, -1, 4)]


def record(number, name, failures, elapsed, budget):
    if elapsed > budget:
        failures.append(f"took {elapsed:.2f} s, budget {budget:.0f} s")
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number}: {name} ({elapsed:.2f} s / {budget:.0f} s)"
    if failures:
        line += " -- " + "; ".join(failures[:5])
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def check(failures, label, got, want):
    if got != want:
        failures.append(f"{label}: got {got!r}, want {want!r}")


def test_criterion_1_quintic_pipeline():
    failures = []
    t0 = time.perf_counter()
    p = parse_polytope_text(serialize_points(QUINTIC, comment="quintic"))
    dual = p.polar_dual
    check(failures, "l", lattice_points(p)[1], math.comb(9, 4))
    check(failures, "l", lattice_points(p)[1], 126)
    check(failures, "d", p.volume, 5 ** 4)
    check(failures, "d*", dual.volume, 5)
    check(failures, "reflexive", is_reflexive(p).reflexive, True)
    check(failures, "h21", hodge_h21(p), 101)
    check(failures, "h11", hodge_h11(p), 1)
    check(failures, "facet sum", hodge_h_n20(p), 20)
    check(failures, "euler", euler_cy3(p), -200)
    q = pair_fundamental_group(dual)
    check(failures, "pi1 factors", q.invariant_factors, (5, 5, 5))
    check(failures, "pi1 order", q.order, 5 ** 3)
    check(failures, "polytope pi1", polytope_fundamental_group(p)[1], 125)
    deg, coker = morphism_check(PHI, dual, p)
    check(failures, "morphism degree", deg, 5 ** 3)
    check(failures, "morphism cokernel", coker.invariant_factors, (5, 5, 5))
    record(1, "quintic golden pipeline", failures, time.perf_counter() - t0, BUDGET_QUINTIC)


def test_criterion_2_mirror_involution():
    failures = []
    t0 = time.perf_counter()
    catalog = [hull(QUINTIC), hull(QUINTIC_DUAL), cube(4), cross_polytope(4)]
    catalog += [weighted_simplex(d).local for d in enumerate_degree_tuples(4)]
    check(failures, "catalog size", len(catalog), 4 + 147)
    for p in catalog:
        d = p.polar_dual
        name = str(p.vertices[:2])
        check(failures, f"{name} double dual", d.polar_dual, p)
        h11, h21 = hodge_h11(p), hodge_h21(p)
        check(failures, f"{name} h11 = h21*", h11, hodge_h21(d))
        check(failures, f"{name} h21 = h11*", h21, hodge_h11(d))
        e = euler_cy3(p)
        check(failures, f"{name} euler = -euler*", e, -euler_cy3(d))
        check(failures, f"{name} euler = 2(h11-h21)", e, 2 * (h11 - h21))
    record(2, "mirror involution suite", failures, time.perf_counter() - t0, BUDGET_MIRROR)


def test_criterion_3_polygon_classification():
    failures = []
    t0 = time.perf_counter()
    result = enumerate_reflexive(2)
    check(failures, "classes", len(result), 16)
    nfs = set(result.normal_forms)
    for p in result.representatives:
        d = p.polar_dual
        check(failures, "dual in list", normal_form(d) in nfs, True)
        _, l, l_star = lattice_points(p)
        _, dl, dl_star = lattice_points(d)
        check(failures, "l*", l_star, 1)
        check(failures, "reflexive", is_reflexive(p).reflexive, True)
        facets = p.face_lattice.by_dim[1]
        check(failures, "facet degrees", sum(p.face_volume(f) for f in facets), p.volume)
        check(failures, "boundary sum", (l - l_star) + (dl - dl_star), 12)
    record(3, "2D classification", failures, time.perf_counter() - t0, BUDGET_CLASSIFY)


def test_criterion_4_mpcp():
    failures = []
    t0 = time.perf_counter()
    res = mpcp_fan(hull([(1, 0), (0, 1), (-1, -2)]))
    check(failures, "F2 rays", len(res.fan.rays), 4)
    check(failures, "(0,-1) is a ray", (0, -1) in res.fan.rays, True)
    check(failures, "F2 smooth", all(r.smooth for r in res.reports.values()), True)
    res = mpcp_fan(hull(QUINTIC))
    check(failures, "quintic rays", len(res.fan.rays), 125)
    for c, rep in res.reports.items():
        if not (rep.simplicial and rep.gorenstein and rep.terminal):
            failures.append(f"cone {sorted(c)} not simplicial/gorenstein/terminal")
        elif any(dot(rep.k_sigma, res.fan.rays[i]) != 1 for i in c):
            failures.append(f"cone {sorted(c)} not crepant")
    record(4, "MPCP correctness", failures, time.perf_counter() - t0, BUDGET_MPCP)


def test_criterion_5_weight_systems():
    failures = []
    t0 = time.perf_counter()
    for n, count in ((1, 1), (2, 3), (3, 14)):
        tuples = enumerate_degree_tuples(n)
        check(failures, f"n={n} count", len(tuples), count)
        check(failures, f"n={n} oracle", sorted(tuples), sorted(oracle_degree_tuples(n)))
        for d in tuples:
            pair = weighted_simplex(d)
            check(failures, f"{d} reflexive", is_reflexive(pair.local).reflexive, True)
            check(failures, f"{d} maximal", pair_fundamental_group(pair).is_trivial, True)
            check(failures, f"{d} round trip", sorted(simplex_weights(pair.local).degrees), sorted(d))
            q, order = fermat_group(d)
            check(failures, f"{d} SNF vs characters", q, _character_kernel_group(list(d)))
            want = Fraction(math.prod(d), math.lcm(*d) ** 2)
            check(failures, f"{d} order", Fraction(order), want)
            check(failures, f"{d} polytope pi1", polytope_fundamental_group(pair.local)[1], order)
    record(5, "weight-system suite", failures, time.perf_counter() - t0, BUDGET_WEIGHTS)


def _det(rows):
    return _qla.adjugate_det([[Fraction(x) for x in r] for r in rows])[1]


def test_criterion_6_properties():
    failures = []
    t0 = time.perf_counter()

    @settings(max_examples=60, deadline=None, database=None)
    @given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c),
                           min_size=r, max_size=r))))
    def snf(m):
        d, u, v = smith_normal_form(m)
        prod = [[sum(u[i][k] * m[k][l] * v[l][j] for k in range(len(m)) for l in range(len(m[0])))
                 for j in range(len(m[0]))] for i in range(len(m))]
        if [list(r) for r in prod] != [list(r) for r in d]:
            failures.append(f"u m v != d for {m}")
        if abs(_det(u)) != 1 or abs(_det(v)) != 1:
            failures.append(f"non-unimodular transform for {m}")

    snf()

    rng = random.Random(20261019)
    pool = polygon_catalog() + threefold_catalog()
    for _ in range(40):
        p = rng.choice(pool)
        m = random_unimodular(rng, p.dim)
        q = hull(transform(p.vertices, m))
        if not is_reflexive(q).reflexive or not is_reflexive(q.polar_dual).reflexive:
            failures.append(f"reflexivity not transported for {p.vertices}")
        if q.polar_dual.polar_dual != q:
            failures.append(f"duality not an involution for {q.vertices}")
        if normal_form(q) != normal_form(p):
            failures.append(f"normal form moved for {p.vertices}")

    for p in pool[::3]:
        t = regular_fine_triangulation(PointConfig(p.points, p))
        vols = sum(abs(_det([[x - s0 for x, s0 in zip(t.points[i], t.points[s[0]])] for i in s[1:]]))
                   for s in t.simplices)
        if vols != p.volume:
            failures.append(f"volume {vols} != {p.volume} for {p.vertices}")
        if not verify_regularity(t)[0]:
            failures.append(f"regularity certificate rejected for {p.vertices}")

    record(6, "property-based suites", failures, time.perf_counter() - t0, BUDGET_PROPERTIES)
