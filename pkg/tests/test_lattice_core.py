import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from reflexive.errors import NoPositiveRelation
from reflexive.lattice_core import (
    AbelianQuotient,
    determinant,
    hermite_normal_form,
    integer_kernel,
    invariant_factors,
    is_primitive,
    lattice_quotient,
    matmul,
    primitive,
    primitive_relation,
    rank,
    saturation,
    smith_normal_form,
    solve_integer,
)

entries = st.integers(min_value=-9, max_value=9)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_reconstructs_with_unimodular_transforms(m):
    d, u, v = smith_normal_form(m)
    assert matmul(matmul(u, m), v) == d
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_invariant_factors_match_sympy(m):
    ours = [f for f in invariant_factors(m)]
    s = sympy_snf(Matrix(m), domain=ZZ)
    theirs = sorted(abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0)
    assert sorted(ours) == theirs


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_hnf_is_canonical_echelon(m):
    h, u = hermite_normal_form(m)
    assert matmul(u, m) == h
    assert abs(determinant(u)) == 1
    last = -1
    for row in h:
        if not any(row):
            continue
        piv = next(j for j, x in enumerate(row) if x)
        assert piv > last and row[piv] > 0
        last = piv
    for i, row in enumerate(h):
        if any(row):
            piv = next(j for j, x in enumerate(row) if x)
            assert all(0 <= h[k][piv] < row[piv] for k in range(i))


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_and_solve(m):
    ncols = len(m[0])
    ker = integer_kernel(m, ncols)
    assert len(ker) == ncols - rank(m)
    for k in ker:
        assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in m)
    x = [1] * ncols
    b = [sum(a * y for a, y in zip(row, x)) for row in m]
    sol = solve_integer(m, b)
    assert sol is not None
    assert [sum(a * y for a, y in zip(row, sol)) for row in m] == b


def test_solve_integer_detects_non_integral():
    assert solve_integer([(2, 0), (0, 2)], [1, 0]) is None
    assert solve_integer([(1, 2)], [3]) is not None


def test_quotient_examples():
    assert lattice_quotient([(1, 0), (0, 1), (-1, -1)], 2).is_trivial
    q = lattice_quotient([(2, -1), (-1, 2), (-1, -1)], 2)
    assert q.invariant_factors == (3,) and q.order == 3
    q = lattice_quotient([(2, 0)], 2)
    assert q.free_rank == 1 and q.order is None
    assert str(AbelianQuotient((5, 5, 5))) == "Z/5 + Z/5 + Z/5"


def test_saturation_of_even_vector():
    assert saturation([(2, 4)], 2) == ((1, 2),)
    assert len(saturation([(1, 0, 0), (0, 1, 0)], 3)) == 2


def test_primitive_helpers():
    assert primitive((4, -6)) == (2, -3)
    assert is_primitive((2, 3)) and not is_primitive((2, 4))


def test_primitive_relation():
    assert primitive_relation([(1, 0), (0, 1), (-2, -3)]) == (2, 3, 1)
    assert primitive_relation([(1, 0), (0, 1), (-1, -1)]) == (1, 1, 1)
    with pytest.raises(NoPositiveRelation):
        primitive_relation([(1, 0), (0, 1), (1, 1)])
    with pytest.raises(NoPositiveRelation):
        primitive_relation([(1, 0), (-1, 0), (0, 1), (0, -1)])
