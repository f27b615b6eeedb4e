import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedquot.algebra import AlgebraError, center, is_ideal, whole
from gradedquot.catalog import build
from gradedquot.constructors import (
    abelian,
    borel,
    direct_sum,
    full_matrix_algebra,
    gl,
    nonabelian2,
    sl,
    so,
)
from gradedquot.derivations import (
    DerivationClass,
    ad_kernel,
    ad_matrix,
    check_zero_component_iso,
    derivation_space,
    graded_der_decompose,
    inner_derivations,
    inner_ideal_tests,
    leibniz_residual,
    multiplication_algebra,
    pieces_exhaust,
    qm_compute,
    restriction_colimit,
    sderivations,
)
from gradedquot.fields import GF, QQ
from gradedquot.grading import matrix_block_grading, trivial_grading
from gradedquot.linalg import Subspace
from gradedquot.report import PASS


def flat(M):
    return tuple(v for row in M.rows for v in row)


def test_der_examples():
    L = sl(2)
    D = derivation_space(L)
    assert D.dim == 3
    assert D.as_subspace() == inner_derivations(L)
    assert derivation_space(full_matrix_algebra(2)).dim == 3
    assert derivation_space(abelian(1)).dim == 1


def test_der_of_nonsubalgebra_raises():
    L = sl(2)
    e, f = (L.unit_vector(L.labels.index(lab)) for lab in ("e12", "e21"))
    bad = Subspace.span(QQ, 3, [e, f])
    with pytest.raises(AlgebraError, match="subalgebra"):
        derivation_space(L, bad)


def test_inner_and_multiplication_algebra():
    assert multiplication_algebra(sl(2)).dim == 9
    assert inner_derivations(abelian(3)).dim == 0


@pytest.mark.parametrize("n,dim", [(2, 1), (3, 3), (5, 10)])
def test_sder_transpose(n, dim):
    assert sderivations(full_matrix_algebra(n, involution="transpose")).dim == dim


def test_sder_needs_involution():
    with pytest.raises(AlgebraError):
        sderivations(full_matrix_algebra(2))


def test_graded_pieces_sl2():
    L = sl(2)
    D = derivation_space(L)
    pieces = graded_der_decompose(D, matrix_block_grading(L, (1, 1)))
    assert {k: P.dim for k, P in pieces.items()} == {-1: 1, 0: 1, 1: 1}
    assert pieces_exhaust(D)
    D2 = derivation_space(L)
    assert {k: P.dim for k, P in graded_der_decompose(D2, trivial_grading(L)).items()} == {0: 3}


def test_graded_pieces_sl3():
    L = sl(3)
    pieces = graded_der_decompose(derivation_space(L), matrix_block_grading(L, (1, 2)))
    assert pieces[0].dim == 4


@pytest.mark.parametrize("L", [sl(2), sl(3), gl(2), borel(2), nonabelian2(), so(4), full_matrix_algebra(2)],
                         ids=["sl2", "sl3", "gl2", "b2", "n2", "so4", "M2"])
def test_leibniz_residual_vanishes(L):
    D = derivation_space(L)
    basis = [L.unit_vector(i) for i in range(L.dim)]
    for M in D.basis:
        assert leibniz_residual(L, basis, M) is None


def test_leibniz_residual_detects_nonderivation():
    L = sl(2)
    from gradedquot.linalg import Matrix
    a, b, res = leibniz_residual(L, [L.unit_vector(i) for i in range(3)], Matrix.identity(QQ, 3))
    assert any(res)


@pytest.mark.parametrize("L", [sl(2), gl(2), borel(2)], ids=["sl2", "gl2", "b2"])
def test_der_closed_and_jacobi(L):
    D = derivation_space(L)
    ends = D.endomorphisms()
    S = D.as_subspace()
    for X, Y in itertools.product(ends, repeat=2):
        assert S.contains(flat(X @ Y - Y @ X))
    DL = D.lie_structure()
    assert DL.is_lie and DL.dim == D.dim


@pytest.mark.parametrize("L", [sl(2), gl(2), borel(2), nonabelian2()], ids=["sl2", "gl2", "b2", "n2"])
def test_inn_is_ideal(L):
    D = derivation_space(L)
    for X in D.endomorphisms():
        for i in range(L.dim):
            x = L.unit_vector(i)
            lhs = X @ ad_matrix(L, x) - ad_matrix(L, x) @ X
            assert lhs == ad_matrix(L, X.apply(x))


@pytest.mark.parametrize("name", ["sl3_q", "sl4_q"])
def test_graded_pieces_bracket_additively(name):
    fx = build(name)
    D = derivation_space(fx.algebra)
    pieces = graded_der_decompose(D, fx.grading)
    assert pieces_exhaust(D)
    spaces = {k: P.as_subspace() for k, P in pieces.items()}
    n = fx.algebra.dim
    for (s, P), (t, Q) in itertools.product(pieces.items(), repeat=2):
        target = spaces.get(s + t, Subspace.zero(QQ, n * n))
        for X in P.endomorphisms()[:3]:
            for Y in Q.endomorphisms()[:3]:
                assert target.contains(flat(X @ Y - Y @ X))


@pytest.mark.parametrize("L", [sl(2), sl(3), so(5)], ids=["sl2", "sl3", "so5"])
def test_whitehead_consistency(L):
    assert derivation_space(L).as_subspace() == inner_derivations(L)


@pytest.mark.parametrize("L", [sl(2), gl(2), borel(2), nonabelian2(), abelian(2), direct_sum(sl(2), abelian(1))],
                         ids=["sl2", "gl2", "b2", "n2", "ab2", "sl2+ab"])
def test_ad_kernel_is_center(L):
    assert ad_kernel(L) == center(L)


@settings(max_examples=20)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_ad_linear(coeffs):
    L = gl(2)
    x = tuple(QQ(c) for c in coeffs)
    total = sum((ad_matrix(L, L.unit_vector(i)).scale(x[i]) for i in range(4)), ad_matrix(L, L.zero_vector()))
    assert ad_matrix(L, x) == total


def test_qm_examples():
    r = qm_compute(sl(2))
    assert r.status == "certified" and r.dim == 3
    assert qm_compute(so(5)).dim == 10
    assert qm_compute(direct_sum(sl(2), sl(2))).dim == 6
    assert qm_compute(gl(2)).status == "inconclusive"
    assert qm_compute(sl(2, GF(5))).status == "inconclusive"


def test_restriction_colimit():
    L = sl(2)
    res = restriction_colimit(L, [whole(L)])
    assert res.derivations.dim == 3 and res.injective == {0: True}
    S = direct_sum(sl(2), sl(2))
    assert restriction_colimit(S, [whole(S)]).derivations.dim == 6


def test_restriction_colimit_rejects_nonessential():
    S = direct_sum(sl(2), sl(2))
    I = Subspace.span(QQ, 6, [S.unit_vector(i) for i in range(3)])
    assert is_ideal(S, I)
    with pytest.raises(AlgebraError, match="essential"):
        restriction_colimit(S, [whole(S), I])
    with pytest.raises(AlgebraError, match="semiprime"):
        restriction_colimit(gl(2), [whole(gl(2))])


def test_derivation_classes():
    L = sl(2)
    D = derivation_space(L)
    a = DerivationClass.from_space(D, D.basis[0], 0)
    b = DerivationClass.from_space(D, D.basis[1], 1)
    assert a.same_class(a.restrict(whole(L)))
    assert not a.same_class(b)
    c = a.bracket(b)
    assert c.degree == 1 and c.domain == whole(L)


def test_zero_component_examples():
    A3 = full_matrix_algebra(3)
    checks = check_zero_component_iso(A3, matrix_block_grading(A3, (1, 2)), expected_c=4, parts="c")
    by = {c.name.rsplit("/", 1)[-1]: c for c in checks}
    assert by["dims-agree"].status == PASS and by["expected-dim"].status == PASS
    A4 = full_matrix_algebra(4)
    checks = check_zero_component_iso(A4, matrix_block_grading(A4, (2, 2)), expected_c=7, parts="ac")
    by = {c.name.split("/", 1)[1]: c for c in checks}
    assert by["c/dims-agree"].status == PASS and by["c/expected-dim"].status == PASS
    assert by["a/surjective"].status == PASS and by["a/kernel-is-center"].status == PASS
    # L_0 has a center, so restriction to L_0 kills ad of it
    assert by["c/restriction-kernel-is-ad-center"].status == PASS


def test_zero_component_m6_transpose():
    fx = build("m6_transpose_33")
    checks = check_zero_component_iso(fx.algebra, fx.grading, expected_d=6, parts="bd")
    assert {c.status for c in checks} == {PASS}


def test_inner_ideal_examples():
    L = sl(2, GF(5))
    e = Subspace.span(L.field, 3, [L.unit_vector(L.labels.index("e12"))])
    r = inner_ideal_tests(L, e)
    assert r.is_inner_ideal and r.is_abelian and r.minimal is True
    r = inner_ideal_tests(L, whole(L))
    assert r.is_inner_ideal and r.minimal is False and r.witness is not None
    x, y = (L.unit_vector(L.labels.index(lab)) for lab in ("e12", "e21"))
    bad = Subspace.span(L.field, 3, [tuple(a + b for a, b in zip(x, y))])
    assert not inner_ideal_tests(L, bad).is_inner_ideal
