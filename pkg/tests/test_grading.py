import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedquot.algebra import INCONCLUSIVE, whole
from gradedquot.constructors import (
    full_matrix_algebra,
    gl,
    matrix_element,
    sl,
    unit_matrix,
)
from gradedquot.fields import QQ
from gradedquot.grading import (
    GradingError,
    degree_of,
    graded_ideal_tests,
    grading_from_idempotents,
    homogeneous_components,
    idempotents_from_grading,
    is_graded_subspace,
    matrix_block_grading,
    peirce_hypotheses,
    peirce_system,
    trivial_grading,
    validate_grading,
)
from gradedquot.linalg import Matrix, Subspace


def u(A, lab):
    return A.unit_vector(A.labels.index(lab))


def mat(A, *pairs):
    n = A.matrix_size
    total = Matrix.zeros(QQ, n, n)
    for i, j in pairs:
        total = total + unit_matrix(QQ, n, i, j)
    return matrix_element(A, total)


def test_sl2_standard_grading():
    L = sl(2)
    g = validate_grading(L, {-1: [u(L, "e21")], 0: [u(L, "h1")], 1: [u(L, "e12")]})
    assert g.support == (-1, 0, 1)
    assert g.radius == 1


def test_m2_grading():
    A = full_matrix_algebra(2)
    g = validate_grading(A, {1: [u(A, "e12")], -1: [u(A, "e21")], 0: [u(A, "e11"), u(A, "e22")]})
    assert g[0].dim == 2


def test_sl2_e12_in_zero_component():
    L = sl(2)
    with pytest.raises(GradingError) as err:
        validate_grading(L, {-1: [u(L, "e21")], 0: [u(L, "h1"), u(L, "e12")]})
    assert err.value.where == (-1, 0, (0, 1))


def test_degree_zero_pair_is_fine_when_e12_in_zero():
    # [L_0, L_0] stays inside L_0 = span(h, e12)
    L = sl(2)
    from gradedquot.algebra import products_span
    Z = Subspace.span(QQ, 3, [u(L, "h1"), u(L, "e12")])
    assert Z.includes(products_span(L, Z, Z))


def test_incomplete_or_dependent_components():
    L = sl(2)
    with pytest.raises(GradingError, match="span only"):
        validate_grading(L, {0: [u(L, "h1")], 1: [u(L, "e12")]})
    with pytest.raises(GradingError, match="independent"):
        validate_grading(L, {0: [u(L, "h1"), u(L, "e12"), u(L, "e21")], 1: [u(L, "e12")]})


def test_homogeneous_components():
    A = full_matrix_algebra(2)
    g = matrix_block_grading(A, (1, 1))
    parts = homogeneous_components(A.element(mat(A, (1, 2), (2, 1))), g)
    assert {k: v.coeffs for k, v in parts.items()} == {1: u(A, "e12"), -1: u(A, "e21")}
    one = homogeneous_components(A.one(), g)
    assert list(one) == [0]
    assert degree_of(u(A, "e12"), g) == 1
    assert degree_of(mat(A, (1, 2), (2, 1)), g) is None


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_components_resum(coeffs):
    A = full_matrix_algebra(3)
    g = matrix_block_grading(A, (1, 2))
    x = A.element(tuple(QQ(c) for c in coeffs))
    parts = homogeneous_components(x, g)
    total = A.element(A.zero_vector())
    for k, v in parts.items():
        assert g[k].contains(v.coeffs)
        total = total + v
    assert total == x


def test_peirce_m2():
    A = full_matrix_algebra(2)
    g = matrix_block_grading(A, (1, 1))
    P = peirce_system(A, g)
    assert P.direct and P.axioms_ok
    assert P.H[1] == Subspace.span(QQ, 4, [u(A, "e11")])
    assert P.H[0] == Subspace.span(QQ, 4, [u(A, "e22")])
    assert P.Hij[(1, 0)] == Subspace.span(QQ, 4, [u(A, "e12")])


def test_peirce_m3_block_dims():
    A = full_matrix_algebra(3)
    P = peirce_system(A, matrix_block_grading(A, (1, 2)))
    dims = {k: V.dim for k, V in P.Hij.items()}
    assert dims == {(1, 1): 1, (1, 0): 2, (0, 1): 2, (0, 0): 4}


def test_peirce_trivial():
    A = full_matrix_algebra(2)
    P = peirce_system(A, trivial_grading(A))
    assert P.Hij[(0, 0)] == whole(A)


def test_peirce_sum_matches_components():
    A = full_matrix_algebra(5)
    g = matrix_block_grading(A, (1, 2, 2))
    P = peirce_system(A, g)
    for k in g.support:
        total = Subspace.zero(QQ, A.dim)
        for (i, j), V in P.Hij.items():
            if i - j == k:
                total = total + V
        assert total == g[k]


def test_idempotents():
    A = full_matrix_algebra(2)
    es = idempotents_from_grading(A, matrix_block_grading(A, (1, 1)))
    assert es == [u(A, "e22"), u(A, "e11")]
    B = full_matrix_algebra(4)
    es = idempotents_from_grading(B, matrix_block_grading(B, (2, 2)))
    assert es == [mat(B, (3, 3), (4, 4)), mat(B, (1, 1), (2, 2))]
    assert idempotents_from_grading(A, trivial_grading(A)) == [A.unit]


def test_grading_from_idempotents():
    A = full_matrix_algebra(2)
    g = grading_from_idempotents(A, [u(A, "e22"), u(A, "e11")])
    assert g[1] == Subspace.span(QQ, 4, [u(A, "e12")])
    B = full_matrix_algebra(4)
    g4 = grading_from_idempotents(B, [mat(B, (3, 3), (4, 4)), mat(B, (1, 1), (2, 2))])
    assert (g4[-1].dim, g4[0].dim, g4[1].dim) == (4, 8, 4)
    t = grading_from_idempotents(A, [A.unit])
    assert t.support == (0,)


@pytest.mark.parametrize("n,blocks", [(2, (1, 1)), (3, (1, 2)), (4, (2, 2)), (5, (1, 2, 2))])
def test_roundtrip(n, blocks):
    A = full_matrix_algebra(n)
    g = matrix_block_grading(A, blocks)
    assert peirce_hypotheses(A, g)
    back = grading_from_idempotents(A, idempotents_from_grading(A, g))
    assert back.support == g.support
    for k in g.support:
        assert back[k] == g[k]


def test_graded_ideal_tests():
    G = gl(2)
    g = matrix_block_grading(G, (1, 1))
    I = Subspace.span(QQ, 4, [mat(G, (1, 2)), mat(G, (2, 1)), tuple(a - b for a, b in zip(mat(G, (1, 1)), mat(G, (2, 2))))])
    r = graded_ideal_tests(G, g, I)
    assert r.is_graded and r.is_graded_ideal and r.is_graded_essential is False
    assert r.annihilator.dim == 1
    L = sl(2)
    gs = matrix_block_grading(L, (1, 1))
    assert graded_ideal_tests(L, gs, whole(L)).is_graded_essential is True
    bad = Subspace.span(QQ, 3, [tuple(a + b for a, b in zip(u(L, "e12"), u(L, "e21")))])
    assert not is_graded_subspace(gs, bad)
    assert graded_ideal_tests(L, gs, bad).is_graded is False


def test_graded_ideal_inconclusive_over_fp():
    from gradedquot.constructors import direct_sum
    from gradedquot.fields import GF
    S = direct_sum(sl(2, GF(5)), sl(2, GF(5)))
    from gradedquot.catalog import sum_grading
    g = sum_grading(S, [matrix_block_grading(sl(2, GF(5)), (1, 1))] * 2)
    I = Subspace.span(S.field, 6, [S.unit_vector(i) for i in range(3)])
    r = graded_ideal_tests(S, g, I)
    # Ann(I) is the second summand and meets I trivially
    assert r.is_graded_essential is False
    r2 = graded_ideal_tests(S, g, I, semiprime=True)
    assert r2.is_graded_essential is False
    assert INCONCLUSIVE == "inconclusive"
