from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedquot.fields import (
    GF,
    QI2,
    QQ,
    SQRT2,
    TOWER,
    FieldMismatch,
    Fp,
    I,
    field_of,
    projective_points,
)


def test_rationals_are_lowest_terms():
    x = QQ("6/4")
    assert x == Fraction(3, 2)
    assert QQ.format(x) == "3/2"
    assert QQ.format(QQ(4)) == "4"


def test_fp_canonical_representatives():
    F = GF(5)
    assert F(-1).v == 4
    assert F("1/2").v == 3
    assert F(7) == F(2)
    with pytest.raises(ZeroDivisionError):
        F("1/5")


def test_gf_rejects_composite():
    with pytest.raises(ValueError):
        GF(6)


def test_mixed_fields_refused():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        QQ(GF(5)(2))


def test_tower_units():
    assert I * I == QI2(-1)
    assert SQRT2 * SQRT2 == QI2(2)
    half = SQRT2 / 2
    assert half * half == QI2(Fraction(1, 2))
    assert TOWER("1/2") == QI2(Fraction(1, 2))


def test_tower_format_roundtrip():
    x = QI2(Fraction(1, 2), -3, 0, Fraction(2, 7))
    assert QI2.parse(x.format()) == x


def test_field_of():
    assert field_of(Fraction(1)) == QQ
    assert field_of(GF(3)(1)) == GF(3)
    assert field_of(I) == TOWER


def test_projective_points_order_and_count():
    F = GF(3)
    pts = list(projective_points(F, 2))
    assert [tuple(c.v for c in p) for p in pts] == [(0, 1), (1, 0), (1, 1), (1, 2)]
    assert len(list(projective_points(GF(5), 3))) == (5 ** 3 - 1) // 4


fp_el = st.integers(0, 6).map(GF(7))
tower_el = st.tuples(*[st.fractions(max_denominator=4, min_value=-4, max_value=4)] * 4).map(lambda t: QI2(*t))


@given(fp_el, fp_el, fp_el)
def test_fp_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    if a:
        assert a * (1 / a) == GF(7)(1)


@given(tower_el, tower_el, tower_el)
def test_tower_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    if a:
        assert a * a.inverse() == QI2(1)


@given(st.integers(2, 3), st.sampled_from([2, 3, 5]))
def test_projective_points_represent_every_line(n, p):
    F = GF(p)
    pts = list(projective_points(F, n))
    assert len(pts) == (p ** n - 1) // (p - 1)
    for v in pts:
        lead = next(c for c in v if c)
        assert lead == F(1)
    assert isinstance(pts[0][0], Fp)
