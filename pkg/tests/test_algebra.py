from fractions import Fraction

import pytest
from conftest import fp_vectors
from hypothesis import given
from hypothesis import strategies as st

from gradedquot.algebra import (
    AlgebraError,
    FinAlgebra,
    ann,
    bracket,
    build_algebra,
    center,
    centroid,
    certificates,
    ideal_closure,
    ideal_violation,
    is_homomorphism,
    is_isomorphism,
    killing_form,
    lan,
    lie_annihilator,
    minus_algebra,
    product,
    qann_member,
    quotient_by_ideal,
    quotient_map,
    ran,
    skew_part,
    span,
    trace_form_radical,
    whole,
)
from gradedquot.constructors import (
    abelian,
    borel,
    direct_sum,
    full_matrix_algebra,
    gl,
    matrix_element,
    sl,
    unit_matrix,
    upper_triangular,
)
from gradedquot.fields import GF, QQ
from gradedquot.linalg import Matrix, Subspace


def vec(A, label):
    return A.unit_vector(A.labels.index(label))


def test_m2_has_unit():
    A = full_matrix_algebra(2)
    assert A.unit == matrix_element(A, Matrix.identity(QQ, 2))
    assert A.one().coeffs == A.unit


def test_sl2_from_table():
    # basis h, e, f
    table = {(0, 1): {1: 2}, (1, 0): {1: -2}, (0, 2): {2: -2}, (2, 0): {2: 2}, (1, 2): {0: 1}, (2, 1): {0: -1}}
    L = build_algebra(QQ, 3, "lie", table, labels=["h", "e", "f"])
    assert bracket(L["e"], L["f"]) == L["h"]
    assert bracket(L["h"], L["e"]) == 2 * L["e"]


def test_alternation_error_names_triple():
    with pytest.raises(AlgebraError) as err:
        build_algebra(QQ, 2, "lie", {(0, 0): {0: 1}})
    assert err.value.where == (0, 0, 0)


def test_associativity_error():
    # e0 e0 = e1, e1 e0 = e0 is not associative
    with pytest.raises(AlgebraError):
        build_algebra(QQ, 2, "associative", {(0, 0): {1: 1}, (1, 0): {0: 1}})


def test_bad_involution():
    A = full_matrix_algebra(2)
    swap = Matrix(QQ, tuple(tuple(1 if j == (i + 1) % 4 else 0 for j in range(4)) for i in range(4)))
    with pytest.raises(AlgebraError):
        FinAlgebra(QQ, 4, "associative", {k: dict(v) for k, v in A.table.items()}, swap)


def test_products():
    g = gl(2)
    assert bracket(g["e11"], g["e12"]) == g["e12"]
    A = full_matrix_algebra(2)
    assert product(A["e12"], A["e21"]) == A["e11"]
    L = sl(2)
    assert bracket(L["e12"], L["e21"]) == L["h1"]


def test_algebra_mismatch():
    with pytest.raises(Exception):
        product(sl(2)["e12"], gl(2)["e12"])


def test_minus_algebra_center():
    L = minus_algebra(full_matrix_algebra(2))
    assert L.dim == 4 and L.is_lie
    Z = center(L)
    assert Z.dim == 1
    assert Z.contains(full_matrix_algebra(2).unit)


def test_skew_parts():
    assert skew_part(full_matrix_algebra(3, involution="transpose")).dim == 3
    K2 = skew_part(full_matrix_algebra(2, involution="transpose"))
    assert K2.dim == 1 and center(K2).dim == 1


def test_skew_part_needs_involution():
    with pytest.raises(AlgebraError):
        skew_part(full_matrix_algebra(2))


def test_centers():
    for n in (2, 3):
        A = full_matrix_algebra(n)
        assert center(A) == span(A, [A.unit])
    assert center(sl(2)).dim == 0


def test_lan_in_t2():
    T = upper_triangular(2)
    X = span(T, [vec(T, "e12")])
    assert lan(T, X) == span(T, [vec(T, "e12"), vec(T, "e22")])
    assert ann(T, X) == lan(T, X) & ran(T, X)


def test_qann_examples():
    B = borel(2)
    assert qann_member(B, vec(B, "e12"), whole(B)).member
    g = gl(2)
    r = qann_member(g, vec(g, "e12"), whole(g))
    assert not r.member
    assert r.witness == vec(g, "e21")
    assert r.value == tuple(-2 * c for c in vec(g, "e12"))
    assert qann_member(g, g.zero_vector(), whole(g)).member


def test_ideal_closure_examples():
    A = full_matrix_algebra(2)
    assert ideal_closure(A, span(A, [vec(A, "e11")])) == whole(A)
    S = direct_sum(sl(2), sl(2))
    first = Subspace.span(QQ, 6, [S.unit_vector(i) for i in range(3)])
    assert ideal_closure(S, span(S, [S.unit_vector(S.labels.index("e12_1"))])) == first


def test_sl_is_closure_of_root_vector():
    for n in (2, 3):
        g = gl(n)
        I = ideal_closure(g, span(g, [vec(g, "e12")]))
        assert I.dim == n * n - 1


def test_quotient_gl2_by_center_is_sl2():
    g = gl(2)
    Z = center(g)
    Q = quotient_by_ideal(g, Z)
    assert Q.dim == 3
    P = quotient_map(g, Z)
    assert is_homomorphism(g, Q, P)
    L = sl(2)
    emb = Matrix.from_columns(QQ, [matrix_element(g, B) for B in L.matrix_basis], 4)
    assert is_isomorphism(L, Q, P @ emb)


def test_quotient_rejects_non_ideal():
    g = gl(2)
    bad = span(g, [vec(g, "e12")])
    assert ideal_violation(g, bad) is not None
    with pytest.raises(AlgebraError):
        quotient_by_ideal(g, bad)


def test_killing_sl2_determinant():
    L = sl(2)
    K = killing_form(L)
    # basis (e, h, f) order from labels
    order = [L.labels.index(x) for x in ("e12", "h1", "e21")]
    M = Matrix(QQ, tuple(tuple(K.rows[i][j] for j in order) for i in order))
    det = (M.rows[0][0] * (M.rows[1][1] * M.rows[2][2] - M.rows[1][2] * M.rows[2][1])
           - M.rows[0][1] * (M.rows[1][0] * M.rows[2][2] - M.rows[1][2] * M.rows[2][0])
           + M.rows[0][2] * (M.rows[1][0] * M.rows[2][1] - M.rows[1][1] * M.rows[2][0]))
    assert det == -128


def test_certificates():
    c = certificates(sl(2))
    assert c.semiprime and c.central_simple is True and c.only_essential_is_whole
    assert centroid(sl(2)).dim == 1
    T = upper_triangular(2)
    assert trace_form_radical(T) == span(T, [vec(T, "e12")])
    c3 = certificates(full_matrix_algebra(3))
    assert c3.radical.dim == 0 and c3.semisimple_associative
    assert center(full_matrix_algebra(3)).dim == 1


def test_certificates_refuse_fp():
    with pytest.raises(ValueError, match="characteristic 0"):
        certificates(sl(2, GF(5)))


@pytest.mark.parametrize("make,dim", [(lambda: sl(3), 8), (lambda: gl(2), 4), (lambda: borel(3), 6),
                                      (lambda: abelian(3), 3), (lambda: full_matrix_algebra(3), 9)])
def test_constructed_fixtures_validate(make, dim):
    A = make()
    A.validate()
    assert A.dim == dim


@given(fp_vectors(5, 3, 1, 2), fp_vectors(5, 3, 1, 2))
def test_ann_inside_qann(xs, ys):
    L = sl(2, GF(5))
    X = Subspace.span(L.field, 3, xs)
    Y = Subspace.span(L.field, 3, ys)
    for x in lie_annihilator(L, X, Y).basis:
        assert qann_member(L, x, Y).member


@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_quotient_projection_is_homomorphism(a, b):
    g = gl(2)
    Z = center(g)
    Q = quotient_by_ideal(g, Z)
    P = quotient_map(g, Z)
    x, y = tuple(map(Fraction, a)), tuple(map(Fraction, b))
    assert P.apply(g.mul(x, y)) == Q.mul(P.apply(x), P.apply(y))


def test_semiprime_ideal_meets_annihilator_trivially():
    S = direct_sum(sl(2), sl(2))
    assert certificates(S).semiprime
    I = Subspace.span(QQ, 6, [S.unit_vector(i) for i in range(3)])
    assert (I & lie_annihilator(S, whole(S), I)).dim == 0


def test_unit_matrix_helper():
    assert unit_matrix(QQ, 2, 1, 2).rows == ((0, 1), (0, 0))
