from fractions import Fraction

import pytest
from conftest import fp_vectors, q_vectors
from hypothesis import given
from hypothesis import strategies as st

from gradedquot.fields import GF, QQ
from gradedquot.linalg import (
    DimensionMismatch,
    Matrix,
    Subspace,
    nullspace,
    solve_linear,
)

F5 = GF(5)


def test_solve_identity():
    x, N = solve_linear(Matrix.identity(QQ, 2), (1, 2))
    assert x == (1, 2)
    assert N.dim == 0


def test_solve_zero_matrix():
    x, N = solve_linear(Matrix.zeros(QQ, 2, 2), (0, 0))
    assert x == (0, 0)
    assert N == Subspace.full(QQ, 2)


def test_solve_inconsistent():
    A = Matrix(QQ, ((1, 2), (2, 4)))
    assert solve_linear(A, (1, 3)) is None
    # consistent right-hand side on the same matrix for contrast
    x, N = solve_linear(A, (1, 2))
    assert A.apply(x) == (1, 2) and N.dim == 1


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_linear(Matrix.identity(QQ, 2), (1, 2, 3))


def test_subspace_basics():
    e1 = Subspace.span(QQ, 2, [(1, 0)])
    e2 = Subspace.span(QQ, 2, [(0, 1)])
    assert e1 + e2 == Subspace.full(QQ, 2)
    assert (e1 & e2).dim == 0
    assert (e1 & e1) == e1


def test_intersection_example():
    U = Subspace.span(QQ, 3, [(1, 1, 0)])
    V = Subspace.span(QQ, 3, [(1, 0, 0), (0, 1, 0)])
    assert U & V == U
    assert (U + V).dim == 2


def test_rref_is_canonical():
    a = Subspace.span(QQ, 3, [(1, 2, 3), (0, 1, 1)])
    b = Subspace.span(QQ, 3, [(2, 5, 7), (1, 1, 2)])
    assert a == b
    assert a.basis == b.basis
    pivots = [next(i for i, v in enumerate(r) if v) for r in a.basis]
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)


def test_quotient_basis_completes():
    U = Subspace.span(QQ, 3, [(1, 0, 0)])
    V = Subspace.span(QQ, 3, [(1, 0, 0), (0, 1, 1)])
    reps = U.quotient_basis(V)
    assert len(reps) == 1
    assert U + Subspace.span(QQ, 3, reps) == V


def test_coordinates_and_contains():
    U = Subspace.span(QQ, 3, [(1, 0, 1), (0, 1, 1)])
    assert U.contains((2, 3, 5))
    assert not U.contains((0, 0, 1))
    c = U.coordinates((2, 3, 5))
    assert tuple(sum(ci * b[k] for ci, b in zip(c, U.basis)) for k in range(3)) == (2, 3, 5)


def test_ambient_mismatch():
    with pytest.raises(DimensionMismatch):
        Subspace.full(QQ, 2) + Subspace.full(QQ, 3)


def test_inverse():
    A = Matrix(QQ, ((2, 1), (1, 1)))
    assert A @ A.inverse() == Matrix.identity(QQ, 2)


def _rows(p, r, c):
    el = st.integers(0, p - 1)
    return st.lists(st.lists(el, min_size=c, max_size=c), min_size=r, max_size=r)


@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rank_nullity_f5(r, c, data):
    rows = data.draw(_rows(5, r, c))
    A = Matrix(F5, tuple(tuple(x) for x in rows), c)
    N = A.nullspace()
    assert A.rank() + N.dim == c
    for v in N.basis:
        assert not any(A.apply(v))


@given(fp_vectors(5, 4), fp_vectors(5, 4))
def test_grassmann_f5(us, vs):
    U = Subspace.span(F5, 4, us)
    V = Subspace.span(F5, 4, vs)
    assert U.dim + V.dim == (U + V).dim + (U & V).dim
    assert U <= U + V and (U & V) <= V


@given(q_vectors(3), q_vectors(3))
def test_grassmann_q(us, vs):
    U = Subspace.span(QQ, 3, us)
    V = Subspace.span(QQ, 3, vs)
    assert U.dim + V.dim == (U + V).dim + (U & V).dim


@given(st.data())
def test_solve_resubstitution(data):
    rows = data.draw(_rows(5, 3, 4))
    b = tuple(F5(x) for x in data.draw(st.lists(st.integers(0, 4), min_size=3, max_size=3)))
    A = Matrix(F5, tuple(tuple(x) for x in rows), 4)
    sol = solve_linear(A, b)
    # consistency oracle: b in the column space
    cols = Subspace.span(F5, 3, [A.column(j) for j in range(4)])
    assert (sol is not None) == cols.contains(b)
    if sol is not None:
        x, N = sol
        assert A.apply(x) == b
        for v in N.basis:
            assert A.apply(tuple(a + c for a, c in zip(x, v))) == b


def test_nullspace_equations():
    # x0 + x1 = 0 over Q in three variables
    basis = nullspace(QQ, [{0: Fraction(1), 1: Fraction(1)}], 3)
    assert len(basis) == 2
