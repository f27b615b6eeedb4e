"""Local algebras xAx, von Neumann regularity and the certified quotient ring.

For a unital finite-dimensional semisimple algebra over a field of
characteristic 0 every essential ideal is the whole algebra, so the
symmetric ring of quotients is A itself.  ``qs_certified`` records exactly
that certificate and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import (
    AlgebraError,
    Element,
    FinAlgebra,
    ann,
    ideal_closure,
    is_ideal,
    is_isomorphism,
    lan,
    ran,
    span,
    subalgebra,
    trace_form_radical,
    whole,
)
from .grading import (
    ZGrading,
    corner_space,
    idempotents_from_grading,
    peirce_hypotheses,
)
from .linalg import Matrix, Subspace, _sparse, solve_linear
from .report import FAIL, INCONCLUSIVE, SKIP, Check, check, expect_equal


def _vec(A: FinAlgebra, x) -> tuple:
    return x.coeffs if isinstance(x, Element) else tuple(A.field(c) for c in x)


def sandwich_matrix(A: FinAlgebra, x) -> Matrix:
    """Matrix of y -> x y x."""
    x = _vec(A, x)
    cols = [A.mul(A.mul(x, A.unit_vector(i)), x) for i in range(A.dim)]
    return Matrix.from_columns(A.field, cols, A.dim)


def regular_inverse(A: FinAlgebra, x) -> Optional[tuple]:
    """Some u with x = xux and u = uxu, or None when x is not regular."""
    if A.is_lie:
        raise AlgebraError("regularity is for associative algebras")
    x = _vec(A, x)
    sol = solve_linear(sandwich_matrix(A, x), x)
    if sol is None:
        return None
    y0 = sol[0]
    return A.mul(A.mul(y0, x), y0)


def is_regular(A: FinAlgebra, x) -> bool:
    return regular_inverse(A, x) is not None


@dataclass(frozen=True)
class LocalAlgebra:
    parent: FinAlgebra
    point: tuple
    carrier: Subspace
    structure: FinAlgebra
    preimages: tuple  # d_b with x d_b x = carrier.basis[b]

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def to_carrier(self, w) -> tuple:
        """Coordinates in the structure's basis of an element of xAx."""
        return self.carrier.coordinates(_vec(self.parent, w))

    def from_carrier(self, coords: Sequence) -> tuple:
        A = self.parent
        out = [A.field.zero] * A.dim
        for c, w in zip(coords, self.carrier.basis):
            if c:
                for i, v in enumerate(w):
                    if v:
                        out[i] = out[i] + c * v
        return tuple(out)


def _local_table(A: FinAlgebra, x: tuple, carrier: Subspace, preimages: Sequence) -> dict:
    struct = {}
    for a, w in enumerate(carrier.basis):
        for b, d in enumerate(preimages):
            prod = A.mul(A.mul(w, d), x)
            c = carrier.coordinates(prod)
            if any(c):
                struct[(a, b)] = _sparse(c)
    return struct


def local_algebra(A: FinAlgebra, x, verify_preimages: bool = True) -> LocalAlgebra:
    """A_x = xAx with (xax) o (xbx) = xaxbx.

    The product of carrier basis vectors w_a, w_b is w_a d_b x for a chosen
    preimage x d_b x = w_b.  With ``verify_preimages`` the table is rebuilt
    from preimages shifted by every kernel vector of y -> xyx and compared.
    """
    if A.is_lie:
        raise AlgebraError("local algebras are for associative algebras")
    x = _vec(A, x)
    M = sandwich_matrix(A, x)
    carrier = Subspace.span(A.field, A.dim, [M.column(i) for i in range(A.dim)])
    preimages = []
    kernel = None
    for w in carrier.basis:
        d, kernel = solve_linear(M, w)
        preimages.append(d)
    struct = _local_table(A, x, carrier, preimages)
    if verify_preimages and kernel is not None and kernel.dim and preimages:
        for k in kernel.basis:
            shifted = [tuple(a + b for a, b in zip(d, k)) for d in preimages]
            if _local_table(A, x, carrier, shifted) != struct:
                raise AlgebraError("local product depends on the chosen preimage")
    S = FinAlgebra(A.field, carrier.dim, A.kind, struct, None, None, None)
    if carrier.dim and carrier.contains(x):
        # x is a unit of A_x exactly when it is regular
        ux = carrier.coordinates(x)
        if _is_two_sided_unit(S, ux):
            S = FinAlgebra(A.field, carrier.dim, A.kind, struct, None, ux, None)
    return LocalAlgebra(A, x, carrier, S, tuple(preimages))


def _is_two_sided_unit(S: FinAlgebra, u: tuple) -> bool:
    return all(
        S.mul(u, S.unit_vector(i)) == S.unit_vector(i) and S.mul(S.unit_vector(i), u) == S.unit_vector(i)
        for i in range(S.dim)
    )


def corner(A: FinAlgebra, e) -> FinAlgebra:
    """eAe for an idempotent e, unital with unit e."""
    e = _vec(A, e)
    if A.mul(e, e) != e:
        raise AlgebraError("corner needs an idempotent")
    return local_algebra(A, e).structure


def corner_subalgebra(A: FinAlgebra, e) -> FinAlgebra:
    """eAe as a subalgebra of A (structure constants restricted directly)."""
    return subalgebra(A, corner_space(A, e, e))


# -- certified quotient ring ---------------------------------------------------------


@dataclass(frozen=True)
class QsCertificate:
    algebra: FinAlgebra
    certified: bool
    radical: Subspace
    reason: str

    def __bool__(self):
        return self.certified

    @property
    def qs(self) -> FinAlgebra:
        if not self.certified:
            raise AlgebraError("no certificate: " + self.reason)
        return self.algebra


def qs_certified(A: FinAlgebra) -> QsCertificate:
    """Certify Q_s(A) = A for a unital semisimple associative algebra in char 0."""
    if A.is_lie:
        raise AlgebraError("qs_certified needs an associative algebra")
    zero = Subspace.zero(A.field, A.dim)
    if A.field.characteristic != 0:
        return QsCertificate(A, False, zero, "characteristic is not 0")
    if A.unit is None:
        return QsCertificate(A, False, zero, "algebra is not unital")
    rad = trace_form_radical(A)
    if rad.dim:
        return QsCertificate(A, False, rad, f"radical has dimension {rad.dim}")
    return QsCertificate(A, True, rad, "unital, semisimple, characteristic 0")


def is_semisimple(A: FinAlgebra) -> bool:
    return A.dim == 0 or trace_form_radical(A).dim == 0


# -- theorem drivers ---------------------------------------------------------------------

LOCAL_ISO = "regular x: Q_s(A_x) = Q_s(A)_x"
LOCAL_LEMMA = "AxIxA + ann(AxIxA) essential; ann inside lan(x) and ran(x)"
QS_ZERO = "Q_s(A)_0 = Q_s(A_0)"


def check_local_iso(A: FinAlgebra, x, tag: str = "") -> list[Check]:
    pre = f"local-iso{tag}"
    cert = qs_certified(A)
    if not cert:
        return [Check(f"{pre}/certificate", LOCAL_ISO, INCONCLUSIVE, reason=cert.reason)]
    x = _vec(A, x)
    u = regular_inverse(A, x)
    if u is None:
        return [Check(f"{pre}/regular", LOCAL_ISO, SKIP,
                      reason="x is not regular; the converse direction has no witnesses in this class")]
    out = [check(f"{pre}/regular", LOCAL_ISO,
                 A.mul(A.mul(x, u), x) == x and A.mul(A.mul(u, x), u) == u, witness=u)]
    Ax = local_algebra(A, x)
    S = Ax.structure
    unit_ok = S.unit is not None and Ax.from_carrier(S.unit) == x
    out.append(check(f"{pre}/unit-is-x", LOCAL_ISO, unit_ok, expected=x, actual=S.unit))
    out.append(check(f"{pre}/semisimple", LOCAL_ISO, is_semisimple(S), expected=0, actual=trace_form_radical(S).dim))
    right = local_algebra(cert.qs, x).structure
    ident = Matrix.identity(A.field, S.dim)
    same = right.dim == S.dim and is_isomorphism(S, right, ident)
    out.append(check(f"{pre}/identity-map", LOCAL_ISO, same, expected=S.dim, actual=right.dim))
    return out


def check_lemma_local(A: FinAlgebra, x, Ix: Optional[Subspace] = None, tag: str = "") -> list[Check]:
    """``Ix`` is given in the coordinates of local_algebra(A, x); None means all of A_x."""
    pre = f"local-lemma{tag}"
    cert = qs_certified(A)
    if not cert:
        return [Check(f"{pre}/certificate", LOCAL_LEMMA, INCONCLUSIVE, reason=cert.reason)]
    x = _vec(A, x)
    Ax = local_algebra(A, x)
    S = Ax.structure
    I = Ix if Ix is not None else whole(S)
    if not is_ideal(S, I):
        return [Check(f"{pre}/precondition", LOCAL_LEMMA, FAIL, reason="I_x is not an ideal of A_x")]
    if not is_semisimple(S) or ann(S, I).dim:
        return [Check(f"{pre}/precondition", LOCAL_LEMMA, FAIL, reason="I_x is not essential in A_x")]
    gens = Subspace.span(A.field, A.dim, [Ax.from_carrier(v) for v in I.basis])
    J = ideal_closure(A, gens)
    annJ = ann(A, J)
    out = [
        expect_equal(f"{pre}/direct", LOCAL_LEMMA, 0, (J & annJ).dim),
        expect_equal(f"{pre}/essential", LOCAL_LEMMA, 0, ann(A, J + annJ).dim,
                     reason="annihilator of the sum must vanish in a semiprime algebra"),
    ]
    X = span(A, [x])
    lr = lan(A, X) & ran(A, X)
    out.append(check(f"{pre}/ann-in-lan-ran", LOCAL_LEMMA, lr.includes(annJ), expected=True, actual=lr.includes(annJ)))
    return out


def check_qs_zero_component(A: FinAlgebra, g: ZGrading, tag: str = "") -> list[Check]:
    pre = f"qs-zero{tag}"
    cert = qs_certified(A)
    if not cert:
        return [Check(f"{pre}/certificate", QS_ZERO, INCONCLUSIVE, reason=cert.reason)]
    hyp = peirce_hypotheses(A, g)
    if not hyp.generated_by_bottom:
        return [Check(f"{pre}/hypotheses", QS_ZERO, FAIL, reason="A is not the ideal generated by A_{-n}")]
    if not hyp.zero_sandwich:
        return [Check(f"{pre}/hypotheses", QS_ZERO, FAIL, reason="A differs from A_0 A A_0")]
    es = idempotents_from_grading(A, g)
    corners = [corner_space(A, e, e) for e in es]
    total = Subspace.zero(A.field, A.dim)
    for C in corners:
        total = total + C
    out = [expect_equal(f"{pre}/A0-is-sum-of-corners", QS_ZERO, g[0], total,
                        reason="A_0 = sum of e_i A e_i")]
    dims = []
    ok = True
    for e in es:
        C = corner(A, e)
        dims.append(C.dim)
        ok = ok and C.unit is not None and is_semisimple(C)
    out.append(check(f"{pre}/corners-semisimple", QS_ZERO, ok, actual=dims))
    A0 = subalgebra(A, g[0])
    out.append(check(f"{pre}/A0-certified", QS_ZERO, bool(qs_certified(A0)), expected=g[0].dim, actual=A0.dim))
    return out

