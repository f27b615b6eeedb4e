"""Named fixtures built from the constructors (the bundled JSON files are dumps of these)."""

from __future__ import annotations

from typing import Callable

from .algebra import FinAlgebra, whole
from .constructors import (
    abelian,
    borel,
    direct_sum,
    full_matrix_algebra,
    gl,
    matrix_element,
    nonabelian2,
    sl,
    sl2_affine,
    so,
    unit_matrix,
)
from .fields import GF, QQ
from .fixtures import Fixture
from .grading import ZGrading, matrix_block_grading, validate_grading
from .linalg import Subspace

F3, F5 = GF(3), GF(5)


def _units(A: FinAlgebra, labels) -> list:
    return [A.unit_vector(A.labels.index(lab)) for lab in labels]


def _by_label(A: FinAlgebra, degrees: dict) -> ZGrading:
    comps: dict = {}
    for lab, d in degrees.items():
        comps.setdefault(d, []).append(A.unit_vector(A.labels.index(lab)))
    return validate_grading(A, comps)


def sum_grading(S: FinAlgebra, gradings) -> ZGrading:
    """Componentwise grading of a direct sum."""
    comps: dict = {}
    off = 0
    for g in gradings:
        d = g.algebra.dim
        for k in g.support:
            for b in g[k].basis:
                comps.setdefault(k, []).append((S.field.zero,) * off + tuple(b) + (S.field.zero,) * (S.dim - off - d))
        off += d
    return validate_grading(S, comps)


def _summand(S: FinAlgebra, start: int, dim: int) -> Subspace:
    return Subspace.span(S.field, S.dim, [S.unit_vector(i) for i in range(start, start + dim)])


def _matrix(A, n, entries):
    total = None
    for i, j in entries:
        m = unit_matrix(A.field, n, i, j)
        total = m if total is None else total + m
    return matrix_element(A, total)


def _graded_matrix(name, n, blocks, field=QQ, kind="lie"):
    def build():
        A = sl(n, field) if kind == "lie" else full_matrix_algebra(n, field)
        return Fixture(name, A, matrix_block_grading(A, blocks))
    return build


def _sl2_sum(name, field):
    def build():
        a, b = sl(2, field), sl(2, field)
        S = direct_sum(a, b)
        g = sum_grading(S, [matrix_block_grading(a, (1, 1)), matrix_block_grading(b, (1, 1))])
        return Fixture(name, S, g, subspaces={"I": _summand(S, 0, 3)})
    return build


def _sl2(name, field):
    def build():
        L = sl(2, field)
        return Fixture(name, L, matrix_block_grading(L, (1, 1)), subspaces={"I": whole(L)})
    return build


def _borel2():
    B = borel(2, F3)
    return Fixture("borel2_f3", B, _by_label(B, {"e11": 0, "e12": 1, "e22": 0}))


def _abelian2():
    L = abelian(2, F3)
    return Fixture("abelian2_f3", L, validate_grading(L, {0: [L.unit_vector(0)], 1: [L.unit_vector(1)]}))


def _nonabelian2():
    L = nonabelian2(F3)
    return Fixture("nonabelian2_f3", L, _by_label(L, {"e": 0, "f": 1}),
                   subspaces={"I": Subspace.span(F3, 2, _units(L, ["f"]))})


def _affine():
    L = sl2_affine(F3)
    g = _by_label(L, {"e12": 1, "h1": 0, "e21": -1, "v1": 1, "v2": 0})
    return Fixture("sl2_affine_f3", L, g, subspaces={"I": Subspace.span(F3, 5, _units(L, ["v1", "v2"]))})


def _gl2():
    L = gl(2, F5)
    return Fixture("gl2_f5", L, matrix_block_grading(L, (1, 1)), subspaces={"sl2": Subspace.span(F5, 4, [
        matrix_element(L, unit_matrix(F5, 2, 1, 2)), matrix_element(L, unit_matrix(F5, 2, 2, 1)),
        matrix_element(L, unit_matrix(F5, 2, 1, 1) - unit_matrix(F5, 2, 2, 2))])})


def _m3_local():
    A = full_matrix_algebra(3)
    return Fixture("m3", A, matrix_block_grading(A, (1, 2)), elements={
        "idem": _matrix(A, 3, [(1, 1), (2, 2)]),
        "shift": _matrix(A, 3, [(1, 2), (2, 3)]),
        "rank1": _matrix(A, 3, [(1, 1)]),
    })


def _m2m3():
    a, b = full_matrix_algebra(2), full_matrix_algebra(3)
    S = direct_sum(a, b)
    x = tuple(matrix_element(a, unit_matrix(QQ, 2, 1, 1))) + tuple(
        matrix_element(b, unit_matrix(QQ, 3, 1, 1) + unit_matrix(QQ, 3, 2, 3)))
    e = tuple(matrix_element(a, unit_matrix(QQ, 2, 2, 2))) + tuple(
        matrix_element(b, unit_matrix(QQ, 3, 1, 1) + unit_matrix(QQ, 3, 3, 3)))
    return Fixture("m2_m3", S, elements={"mixed": e, "mixed_nonidem": x})


def _transpose(name, n, blocks=None):
    def build():
        A = full_matrix_algebra(n, involution="transpose")
        return Fixture(name, A, matrix_block_grading(A, blocks) if blocks else None)
    return build


CATALOG: dict[str, Callable[[], Fixture]] = {
    "sl2": _sl2("sl2", QQ),
    "sl2_q": _sl2("sl2_q", QQ),
    "sl2_f3": _sl2("sl2_f3", F3),
    "sl2_f5": _sl2("sl2_f5", F5),
    "sl3_q": _graded_matrix("sl3_q", 3, (1, 2)),
    "sl4_q": _graded_matrix("sl4_q", 4, (2, 2)),
    "sl2xsl2_f3": _sl2_sum("sl2xsl2_f3", F3),
    "sl2xsl2_f5": _sl2_sum("sl2xsl2_f5", F5),
    "borel2_f3": _borel2,
    "abelian2_f3": _abelian2,
    "nonabelian2_f3": _nonabelian2,
    "sl2_affine_f3": _affine,
    "gl2_f5": _gl2,
    "so5_q": lambda: Fixture("so5_q", so(5)),
    "m2": _graded_matrix("m2", 2, (1, 1), kind="assoc"),
    "m3": _m3_local,
    "m4_22": _graded_matrix("m4_22", 4, (2, 2), kind="assoc"),
    "m5_122": _graded_matrix("m5_122", 5, (1, 2, 2), kind="assoc"),
    "m2_m3": _m2m3,
    "m3_transpose": _transpose("m3_transpose", 3),
    "m5_transpose": _transpose("m5_transpose", 5),
    "m6_transpose_33": _transpose("m6_transpose_33", 6, (3, 3)),
}


def build(name: str) -> Fixture:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"no catalog fixture {name!r}") from None
