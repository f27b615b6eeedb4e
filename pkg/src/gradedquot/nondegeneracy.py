"""Absolute zero divisors and strong nondegeneracy.

x is an absolute zero divisor of L when (ad_x)^2 = 0.  Over F_p the
question is decided by exhaustive projective enumeration (the property is
invariant under nonzero scaling).  In characteristic 0 a finite-dimensional
Lie algebra is strongly nondegenerate exactly when it is semisimple: a
nonzero abelian ideal consists of absolute zero divisors, and a semisimple
algebra has none.  So the Killing form decides it there, and an abelian
ideal inside the solvable radical supplies the witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Optional, Sequence

import numpy as np

from .algebra import (
    AlgebraError,
    Element,
    FinAlgebra,
    _commutator,
    center,
    is_ideal,
    killing_form,
    products_span,
    qann_member,
    solvable_radical,
    subalgebra,
    whole,
)
from .fields import Field, projective_points
from .grading import ZGrading, is_graded_subspace
from .linalg import Subspace
from .report import FAIL, INCONCLUSIVE, PASS, Check, check

DEFAULT_BUDGET = 10 ** 7

NONDEGENERATE = "nondegenerate"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class AZDResult:
    is_azd: bool
    witness: Optional[tuple] = None  # basis vector y with [x,[x,y]] != 0
    value: Optional[tuple] = None

    def __bool__(self):
        return self.is_azd


def _vec(L: FinAlgebra, x) -> tuple:
    return x.coeffs if isinstance(x, Element) else tuple(L.field(c) for c in x)


def azd_test(L: FinAlgebra, x, Y: Optional[Subspace] = None) -> AZDResult:
    """Whether [x, [x, Y]] = 0 (Y defaults to L), with a witness otherwise."""
    x = _vec(L, x)
    Y = Y if Y is not None else whole(L)
    r = qann_member(L, x, Y)
    return AZDResult(r.member, r.witness, r.value)


def ad_square_is_zero(L: FinAlgebra, x) -> bool:
    """Entrywise test of (ad_x)^2 = 0; independent of azd_test."""
    A = L.ad(_vec(L, x))
    return (A @ A).is_zero()


@dataclass(frozen=True)
class SNDVerdict:
    status: str  # nondegenerate | degenerate | inconclusive
    witness: Optional[tuple] = None
    method: str = ""
    parameters: dict = dc_field(default_factory=dict)

    @property
    def nondegenerate(self) -> bool:
        return self.status == NONDEGENERATE


# -- exhaustive search over F_p ---------------------------------------------------------


def _ints(field: Field, vectors: Sequence[Sequence]) -> np.ndarray:
    return np.array([[int(c.v) if hasattr(c, "v") else int(c) % field.p for c in v] for v in vectors], dtype=np.int64).reshape(len(vectors), -1)


def _projective_block(p: int, dim: int, lead: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic enumeration with leading 1 at ``lead``."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((len(idx), dim), dtype=np.int64)
    out[:, lead] = 1
    for pos in range(dim - 1, lead, -1):
        out[:, pos] = idx % p
        idx = idx // p
    return out


def _search_space(L: FinAlgebra, basis: Sequence[Sequence], Y: Sequence[Sequence], chunk: int = 1 << 15):
    """First x in span(basis) (projective, lexicographic in basis coordinates)
    with [x, [x, y]] = 0 for all y in Y.  Returns (coords, ambient, checked)."""
    p = L.field.p
    n = L.dim
    d = len(basis)
    B = _ints(L.field, basis)  # d x n
    ads = np.array([[[int(v.v) for v in row] for row in L.ad(L.unit_vector(i)).rows] for i in range(n)], dtype=np.int64)
    Ymat = _ints(L.field, Y).T if Y else np.zeros((n, 0), dtype=np.int64)  # n x |Y|
    checked = 0
    for lead in reversed(range(d)):
        total = p ** (d - lead - 1)
        for start in range(0, total, chunk):
            stop = min(total, start + chunk)
            C = _projective_block(p, d, lead, start, stop)  # m x d
            X = (C @ B) % p  # m x n ambient coordinates
            AD = np.einsum("mi,ijk->mjk", X, ads) % p  # ad_x
            AY = np.einsum("mjk,kl->mjl", AD, Ymat) % p
            AAY = np.einsum("mjk,mkl->mjl", AD, AY) % p
            hits = np.flatnonzero(~AAY.reshape(len(C), -1).any(axis=1))
            if hits.size:
                h = int(hits[0])
                checked += h + 1
                return tuple(int(v) for v in C[h]), tuple(int(v) for v in X[h]), checked
            checked += len(C)
    return None, None, checked


def _search_space_exact(L: FinAlgebra, basis: Sequence[Sequence], Y: Sequence[Sequence]):
    """Pure Python version of _search_space (used as an independent oracle)."""
    checked = 0
    for coords in projective_points(L.field, len(basis)):
        checked += 1
        x = [L.field.zero] * L.dim
        for c, b in zip(coords, basis):
            if c:
                x = [u + c * v for u, v in zip(x, b)]
        if all(not any(_commutator(L, x, _commutator(L, x, y))) for y in Y):
            return tuple(c.v for c in coords), tuple(L.field(v) for v in x), checked
    return None, None, checked


def azd_exhaustive(
    L: FinAlgebra,
    homogeneous_only: bool = False,
    g: Optional[ZGrading] = None,
    budget: int = DEFAULT_BUDGET,
    within: Optional[Subspace] = None,
    exact: bool = False,
) -> SNDVerdict:
    """Exhaustive search for a nonzero absolute zero divisor over F_p.

    ``within`` restricts both the candidates and the test vectors to a
    subspace (an ideal I, for strong nondegeneracy of I itself).  In
    homogeneous mode the candidates run over each graded piece in turn,
    lowest degree first.
    """
    if L.field.kind != "Fp":
        raise AlgebraError("exhaustive search needs a prime field")
    if not L.is_lie:
        raise AlgebraError("absolute zero divisors are defined for Lie algebras")
    p = L.field.p
    W = within if within is not None else whole(L)
    if homogeneous_only:
        if g is None:
            raise AlgebraError("homogeneous search needs a grading")
        spaces = [(k, (W & g[k]).basis) for k in g.support]
    else:
        spaces = [(None, W.basis)]
    spaces = [(k, b) for k, b in spaces if b]
    size = sum(p ** len(b) for _, b in spaces)
    method = "homogeneous-exhaustive-Fp" if homogeneous_only else "exhaustive-Fp"
    params = {"p": p, "budget": budget, "candidates": size}
    if size > budget:
        return SNDVerdict(INCONCLUSIVE, None, method, params | {"reason": f"{size} candidates exceed the budget"})
    checked = 0
    Y = list(W.basis)
    for k, basis in spaces:
        search = _search_space_exact if exact else _search_space
        coords, x, c = search(L, basis, Y)
        checked += c
        if x is not None:
            x = tuple(L.field(v) for v in x)
            if not azd_test(L, x, W).is_azd:
                raise AssertionError("vectorised search returned a non-witness")
            return SNDVerdict(DEGENERATE, x, method, params | {"checked": checked, "degree": k})
    return SNDVerdict(NONDEGENERATE, None, method, params | {"checked": checked})


def snd_char0(L: FinAlgebra) -> SNDVerdict:
    """Decide strong nondegeneracy in characteristic 0 through the solvable radical."""
    if L.field.characteristic != 0:
        raise AlgebraError("snd_char0 needs characteristic 0")
    if killing_form(L).rank() == L.dim:
        return SNDVerdict(NONDEGENERATE, None, "killing")
    # last nonzero term of the derived series of the radical is an abelian ideal
    R = solvable_radical(L)
    while True:
        nxt = products_span(L, R, R)
        if nxt.dim == 0:
            break
        R = nxt
    x = R.basis[0]
    if not azd_test(L, x).is_azd:
        raise AssertionError("abelian ideal element is not an absolute zero divisor")
    return SNDVerdict(DEGENERATE, x, "killing")


def snd_verdict(L: FinAlgebra, homogeneous_only: bool = False, g: Optional[ZGrading] = None, budget: int = DEFAULT_BUDGET) -> SNDVerdict:
    if L.field.characteristic == 0:
        return snd_char0(L)
    return azd_exhaustive(L, homogeneous_only, g, budget)


# -- drivers ---------------------------------------------------------------------------------

GREQUIV = "graded strongly nondegenerate iff strongly nondegenerate"
HERENCIA = "L_0 strongly nondegenerate, Z(L) = 0, L_0 = [L_1, L_-1] imply L strongly nondegenerate"
HOMCUAD = "[x,[x,a]] in QAnn_I(I) for homogeneous x in QAnn_I(I)"
GRADID = "graded ideals of graded strongly nondegenerate algebras are graded strongly nondegenerate"


def check_grequiv(L: FinAlgebra, g: ZGrading, budget: int = DEFAULT_BUDGET, tag: str = "") -> list[Check]:
    pre = f"grequiv{tag}"
    hom = azd_exhaustive(L, True, g, budget)
    full = azd_exhaustive(L, False, None, budget)
    if INCONCLUSIVE in (hom.status, full.status):
        return [Check(f"{pre}/agree", GREQUIV, INCONCLUSIVE, reason="search over budget")]
    return [check(f"{pre}/agree", GREQUIV, hom.status == full.status,
                  expected=full.status, actual=hom.status, witness=full.witness or hom.witness)]


def _l0_verdict(L: FinAlgebra, g: ZGrading, budget: int) -> SNDVerdict:
    L0 = subalgebra(L, g[0])
    v = snd_verdict(L0, budget=budget)
    if v.witness is not None:
        # report the witness in L's coordinates
        x = [L.field.zero] * L.dim
        for c, b in zip(v.witness, g[0].basis):
            x = [u + L.field(c) * w for u, w in zip(x, b)]
        return SNDVerdict(v.status, tuple(x), v.method, v.parameters)
    return v


def check_herencia1(L: FinAlgebra, g: ZGrading, budget: int = DEFAULT_BUDGET, tag: str = "") -> list[Check]:
    """Verify the hypotheses, then the conclusion or the converse-failure phenomenon."""
    pre = f"herencia1{tag}"
    if set(g.support) - {-1, 0, 1}:
        return [Check(f"{pre}/three-grading", HERENCIA, FAIL, reason="not a 3-grading")]
    if L.field.characteristic in (2, 3):
        return [Check(f"{pre}/characteristic", HERENCIA, INCONCLUSIVE, reason="characteristic 2 or 3")]
    z = center(L).dim == 0
    gen = products_span(L, g[1], g[-1]) == g[0]
    v0 = _l0_verdict(L, g, budget)
    out = [
        Check(f"{pre}/hyp-center", HERENCIA, PASS, expected=0, actual=center(L).dim,
              reason="" if z else "hypothesis fails: Z(L) != 0"),
        Check(f"{pre}/hyp-L0-generated", HERENCIA, PASS, expected=True, actual=gen,
              reason="" if gen else "hypothesis fails: L_0 != [L_1, L_-1]"),
        Check(f"{pre}/hyp-L0-nondegenerate", HERENCIA,
              INCONCLUSIVE if v0.status == INCONCLUSIVE else PASS,
              expected=NONDEGENERATE, actual=v0.status, witness=v0.witness,
              reason="" if v0.nondegenerate else "hypothesis fails: L_0 has an absolute zero divisor"),
    ]
    # the verdict on L itself
    v = snd_verdict(L, homogeneous_only=L.field.characteristic != 0, g=g, budget=budget)
    if v.status == INCONCLUSIVE:
        out.append(Check(f"{pre}/conclusion", HERENCIA, INCONCLUSIVE, reason="search over budget"))
        return out
    if z and gen and v0.nondegenerate:
        out.append(check(f"{pre}/conclusion", HERENCIA, v.nondegenerate, expected=NONDEGENERATE, actual=v.status, witness=v.witness))
    else:
        out.append(Check(f"{pre}/converse-failure", HERENCIA, PASS, expected=None, actual=v.status,
                         reason=f"hypotheses fail; L is {v.status} ({v.method})"))
    return out


def _qann_point(L: FinAlgebra, z: Sequence, I: Subspace) -> bool:
    """z in QAnn_I(I): z in I and [z, [z, I]] = 0."""
    return I.contains(z) and qann_member(L, z, I).member


def check_homcuad(L: FinAlgebra, g: ZGrading, I: Subspace, budget: int = DEFAULT_BUDGET, tag: str = "") -> list[Check]:
    """Exhaustive over homogeneous x in QAnn_I(I) (projective) and homogeneous basis a."""
    pre = f"homcuad{tag}"
    if L.field.kind != "Fp":
        return [Check(f"{pre}/field", HOMCUAD, INCONCLUSIVE, reason="exhaustive check needs F_p")]
    if center(L).dim:
        return [Check(f"{pre}/precondition", HOMCUAD, FAIL, reason="Z(L) != 0")]
    if not (is_graded_subspace(g, I) and is_ideal(L, I)):
        return [Check(f"{pre}/precondition", HOMCUAD, FAIL, reason="I is not a graded ideal")]
    p = L.field.p
    pieces = [(I & g[k]) for k in g.support]
    if sum(p ** P.dim for P in pieces) > budget:
        return [Check(f"{pre}/closure", HOMCUAD, INCONCLUSIVE, reason="over budget")]
    hbasis = [v for _, v in g.homogeneous_basis()]
    members = 0
    for P in pieces:
        for coords in projective_points(L.field, P.dim) if P.dim else ():
            x = [L.field.zero] * L.dim
            for c, b in zip(coords, P.basis):
                if c:
                    x = [u + c * w for u, w in zip(x, b)]
            if not _qann_point(L, x, I):
                continue
            members += 1
            for a in hbasis:
                z = _commutator(L, x, _commutator(L, x, a))
                if not _qann_point(L, z, I):
                    return [Check(f"{pre}/closure", HOMCUAD, FAIL, witness={"x": x, "a": a, "z": z})]
    return [Check(f"{pre}/closure", HOMCUAD, PASS, actual={"qann_points": members, "basis": len(hbasis)})]


def check_gradid(L: FinAlgebra, g: ZGrading, I: Subspace, budget: int = DEFAULT_BUDGET, tag: str = "") -> list[Check]:
    pre = f"gradid{tag}"
    if not (is_graded_subspace(g, I) and is_ideal(L, I)):
        return [Check(f"{pre}/precondition", GRADID, FAIL, reason="I is not a graded ideal")]
    vL = azd_exhaustive(L, True, g, budget)
    if vL.status == INCONCLUSIVE:
        return [Check(f"{pre}/ideal", GRADID, INCONCLUSIVE, reason="search over budget")]
    if not vL.nondegenerate:
        return [Check(f"{pre}/ideal", GRADID, INCONCLUSIVE, actual=vL.status, reason="L itself is degenerate; nothing to inherit")]
    vI = azd_exhaustive(L, True, g, budget, within=I)
    return [check(f"{pre}/ideal", GRADID, vI.nondegenerate, expected=NONDEGENERATE, actual=vI.status, witness=vI.witness)]
