"""Finite Z-gradings, homogeneous components and Peirce systems.

Convention for matrix block gradings: with blocks listed from the top-left
down, the matrix unit E_ab has degree blk(b) - blk(a).  With idempotents
indexed so that e_n is the top block and e_0 the bottom one this gives
A_k = sum_{i-j=k} e_i A e_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Mapping, Optional, Sequence

from .algebra import (
    INCONCLUSIVE,
    AlgebraError,
    Element,
    FinAlgebra,
    _solve_in,
    ann,
    ideal_closure,
    is_ideal,
    killing_form,
    products_span,
    whole,
)
from .constructors import block_of
from .linalg import Coordinates, Matrix, Subspace


class GradingError(ValueError):
    """A candidate decomposition is not a grading.

    ``where`` is ``(sigma, tau, (a, b))`` for a multiplicativity failure:
    basis vector a of S_sigma times basis vector b of S_tau leaves
    S_{sigma+tau}.
    """

    def __init__(self, message: str, where: Optional[tuple] = None):
        super().__init__(message)
        self.where = where


@dataclass(frozen=True)
class ZGrading:
    algebra: FinAlgebra
    components: Mapping[int, Subspace]
    validated: bool = True

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(k for k, V in self.components.items() if V.dim))

    @property
    def radius(self) -> int:
        return max((abs(k) for k in self.support), default=0)

    def __getitem__(self, k: int) -> Subspace:
        V = self.components.get(k)
        return V if V is not None else Subspace.zero(self.algebra.field, self.algebra.dim)

    def degrees(self) -> list[int]:
        return sorted(self.components)

    def homogeneous_basis(self) -> list[tuple[int, tuple]]:
        """(degree, vector) for every component basis vector, by degree."""
        return [(k, v) for k in self.degrees() for v in self.components[k].basis]

    def to_json(self) -> dict:
        f = self.algebra.field
        return {str(k): [[f.format(c) for c in v] for v in V.basis] for k, V in sorted(self.components.items())}


def grading_violation(S: FinAlgebra, comps: Mapping[int, Subspace]) -> Optional[tuple]:
    """First (sigma, tau, (a, b)) with S_sigma[a] * S_tau[b] outside S_{sigma+tau}."""
    zero = Subspace.zero(S.field, S.dim)
    degs = sorted(comps)
    for s in degs:
        for t in degs:
            target = comps.get(s + t, zero)
            for a, x in enumerate(comps[s].basis):
                for b, y in enumerate(comps[t].basis):
                    if not target.contains(S.mul(x, y)):
                        return (s, t, (a, b))
    return None


def validate_grading(S: FinAlgebra, components: Mapping) -> ZGrading:
    """Check that the given spanning sets form a Z-grading of S.

    ``components`` maps degrees (ints or strings) to spanning lists of
    vectors or to Subspaces.
    """
    comps: dict[int, Subspace] = {}
    for k, vecs in components.items():
        V = vecs if isinstance(vecs, Subspace) else Subspace.span(S.field, S.dim, [tuple(S.field(c) for c in v) for v in vecs])
        comps[int(k)] = V
    total = sum(V.dim for V in comps.values())
    span_all = Subspace.span(S.field, S.dim, [v for V in comps.values() for v in V.basis])
    if span_all.dim < total:
        raise GradingError("components are not independent")
    if span_all.dim < S.dim:
        raise GradingError(f"components span only {span_all.dim} of {S.dim} dimensions")
    bad = grading_violation(S, comps)
    if bad is not None:
        s, t, (a, b) = bad
        raise GradingError(f"product of degrees {s} and {t} leaves degree {s + t} at basis pair ({a}, {b})", bad)
    return ZGrading(S, dict(sorted(comps.items())))


def trivial_grading(S: FinAlgebra) -> ZGrading:
    return ZGrading(S, {0: whole(S)})


def homogeneous_components(x, g: ZGrading) -> dict[int, Element]:
    """Map degree -> nonzero homogeneous component of x."""
    S = g.algebra
    coeffs = x.coeffs if isinstance(x, Element) else tuple(S.field(c) for c in x)
    pairs = g.homogeneous_basis()
    coords = Coordinates(S.field, [v for _, v in pairs], S.dim)(coeffs)
    out: dict[int, list] = {}
    for (k, v), c in zip(pairs, coords):
        if c:
            acc = out.setdefault(k, [S.field.zero] * S.dim)
            for i, vi in enumerate(v):
                if vi:
                    acc[i] = acc[i] + c * vi
    return {k: Element(S, vec) for k, vec in sorted(out.items()) if any(vec)}


def degree_of(x, g: ZGrading) -> Optional[int]:
    """Degree of a nonzero homogeneous element, None otherwise."""
    comps = homogeneous_components(x, g)
    return next(iter(comps)) if len(comps) == 1 else None


# -- gradings of matrix algebras ------------------------------------------------


def matrix_block_grading(A: FinAlgebra, blocks: Sequence[int]) -> ZGrading:
    """Grading of a matrix-span algebra by block position.

    The degree-k component is the part of A supported on the entries E_ab
    with blk(b) - blk(a) = k.
    """
    n = A.matrix_size
    if sum(blocks) != n or any(b <= 0 for b in blocks):
        raise GradingError(f"blocks {tuple(blocks)} do not partition {n}")
    deg = {(a, b): block_of(b + 1, blocks) - block_of(a + 1, blocks) for a in range(n) for b in range(n)}
    W = whole(A)
    comps = {}
    for k in sorted(set(deg.values())):
        off = [a * n + b for (a, b), d in deg.items() if d != k]

        def cond(u, off=off):
            flat = _as_flat(A, u)
            return [tuple(flat[p] for p in off)]

        V = _solve_in(W, cond)
        if V.dim:
            comps[k] = V
    return validate_grading(A, comps)


def _as_flat(A: FinAlgebra, u) -> list:
    n2 = A.matrix_size ** 2
    out = [A.field.zero] * n2
    for c, B in zip(u, A.matrix_basis):
        if c:
            for p, v in enumerate(B.flat()):
                if v:
                    out[p] = out[p] + c * v
    return out


# -- idempotents ------------------------------------------------------------------


def _vec(A: FinAlgebra, x) -> tuple:
    return x.coeffs if isinstance(x, Element) else tuple(A.field(c) for c in x)


def corner_space(A: FinAlgebra, e, f) -> Subspace:
    """e A f."""
    e, f = _vec(A, e), _vec(A, f)
    return Subspace.span(A.field, A.dim, [A.mul(A.mul(e, A.unit_vector(i)), f) for i in range(A.dim)])


def check_idempotent_family(A: FinAlgebra, es: Sequence) -> None:
    """Raise AlgebraError unless es is a complete family of orthogonal idempotents."""
    if A.unit is None:
        raise AlgebraError("idempotent families need a unital algebra")
    es = [_vec(A, e) for e in es]
    for i, e in enumerate(es):
        if A.mul(e, e) != e:
            raise AlgebraError(f"element {i} is not idempotent", (i,))
        for j, f in enumerate(es):
            if i != j and any(A.mul(e, f)):
                raise AlgebraError(f"elements {i} and {j} are not orthogonal", (i, j))
    total = tuple(sum(col, A.field.zero) for col in zip(*es)) if es else A.zero_vector()
    if total != A.unit:
        raise AlgebraError("idempotents do not sum to the unit")


def grading_from_idempotents(A: FinAlgebra, es: Sequence) -> ZGrading:
    """A_k = sum over i - j = k of e_i A e_j (list index = idempotent index)."""
    check_idempotent_family(A, es)
    es = [_vec(A, e) for e in es]
    comps: dict[int, Subspace] = {}
    for i, e in enumerate(es):
        for j, f in enumerate(es):
            C = corner_space(A, e, f)
            k = i - j
            comps[k] = comps[k] + C if k in comps else C
    return validate_grading(A, {k: V for k, V in comps.items() if V.dim})


# -- Peirce systems -----------------------------------------------------------------


def triple_span(A: FinAlgebra, X: Subspace, Y: Subspace, Z: Subspace) -> Subspace:
    return products_span(A, products_span(A, X, Y), Z)


@dataclass
class PeirceSystem:
    algebra: FinAlgebra
    n: int
    H: dict  # i -> Subspace
    Hij: dict  # (i, j) -> Subspace
    direct: bool
    axioms_ok: bool
    diagnosis: list = dc_field(default_factory=list)
    _coords: Optional[Coordinates] = dc_field(default=None, repr=False)
    _slots: list = dc_field(default_factory=list, repr=False)

    def projection(self, i: int, j: int, x) -> tuple:
        """pi_ij(x), defined when the H_ij form a direct sum equal to A."""
        if not self.direct:
            raise AlgebraError("Peirce spaces do not decompose the algebra")
        A = self.algebra
        c = self._coords(_vec(A, x))
        out = [A.field.zero] * A.dim
        for (key, v), coef in zip(self._slots, c):
            if key == (i, j) and coef:
                for t, vt in enumerate(v):
                    if vt:
                        out[t] = out[t] + coef * vt
        return tuple(out)

    def projection_matrix(self, i: int, j: int) -> Matrix:
        A = self.algebra
        return Matrix.from_columns(A.field, [self.projection(i, j, A.unit_vector(t)) for t in range(A.dim)], A.dim)


def peirce_system(A: FinAlgebra, g: ZGrading) -> PeirceSystem:
    """H_i = A_i A_{-n} A_{n-i} and H_ij = H_i A H_j for the radius n of g.

    Failures of the Peirce axioms or of the direct sum are recorded in
    ``diagnosis`` rather than raised.
    """
    if A.is_lie:
        raise AlgebraError("Peirce systems need an associative algebra")
    n = g.radius
    W = whole(A)
    H = {i: triple_span(A, g[i], g[-n], g[n - i]) for i in range(n + 1)}
    Hij = {(i, j): triple_span(A, H[i], W, H[j]) for i in range(n + 1) for j in range(n + 1)}
    diagnosis = []
    axioms_ok = True
    zero = Subspace.zero(A.field, A.dim)
    for (i, j), U in Hij.items():
        for (k, l), V in Hij.items():
            target = Hij[(i, l)] if j == k else zero
            P = products_span(A, U, V)
            if not target.includes(P):
                axioms_ok = False
                diagnosis.append(f"H_{i}{j} H_{k}{l} not inside {'H_%d%d' % (i, l) if j == k else '0'}")
    slots = [(key, v) for key in sorted(Hij) for v in Hij[key].basis]
    total = Subspace.span(A.field, A.dim, [v for _, v in slots])
    direct = len(slots) == total.dim == A.dim
    if not direct:
        if total.dim < A.dim:
            diagnosis.append(f"sum of the H_ij has dimension {total.dim} < {A.dim}")
        if len(slots) > total.dim:
            diagnosis.append("the H_ij are not independent")
    coords = Coordinates(A.field, [v for _, v in slots], A.dim) if direct else None
    return PeirceSystem(A, n, H, Hij, direct, axioms_ok, diagnosis, coords, slots)


@dataclass(frozen=True)
class PeirceHypotheses:
    generated_by_bottom: bool  # A = id(A_{-n})
    zero_sandwich: bool  # A = A_0 A A_0

    def __bool__(self):
        return self.generated_by_bottom and self.zero_sandwich


def peirce_hypotheses(A: FinAlgebra, g: ZGrading) -> PeirceHypotheses:
    n = g.radius
    W = whole(A)
    gen = ideal_closure(A, g[-n]) == W
    sand = triple_span(A, g[0], W, g[0]) == W
    return PeirceHypotheses(gen, sand)


def idempotents_from_grading(A: FinAlgebra, g: ZGrading) -> list[tuple]:
    """e_k = sum_i pi_ik(1), k = 0..n, for a unital algebra."""
    if A.unit is None:
        raise AlgebraError("idempotents_from_grading needs a unital algebra")
    hyp = peirce_hypotheses(A, g)
    if not hyp.generated_by_bottom:
        raise AlgebraError("A is not generated as an ideal by its lowest component")
    if not hyp.zero_sandwich:
        raise AlgebraError("A differs from A_0 A A_0")
    P = peirce_system(A, g)
    if not (P.direct and P.axioms_ok):
        raise AlgebraError("Peirce system fails: " + "; ".join(P.diagnosis))
    es = []
    for k in range(P.n + 1):
        acc = [A.field.zero] * A.dim
        for i in range(P.n + 1):
            for t, v in enumerate(P.projection(i, k, A.unit)):
                acc[t] = acc[t] + v
        es.append(tuple(acc))
    check_idempotent_family(A, es)
    return es


# -- graded ideals ------------------------------------------------------------------


@dataclass(frozen=True)
class GradedIdealTests:
    is_graded: bool
    is_graded_ideal: bool
    is_graded_essential: object  # True, False or INCONCLUSIVE
    annihilator: Subspace
    reason: str = ""


def is_graded_subspace(g: ZGrading, I: Subspace) -> bool:
    pieces = Subspace.zero(I.field, I.ambient_dim)
    for V in g.components.values():
        pieces = pieces + (I & V)
    return pieces == I


def graded_ideal_tests(L: FinAlgebra, g: ZGrading, I: Subspace, semiprime: Optional[bool] = None) -> GradedIdealTests:
    """Gradedness, ideal property and essentiality (Ann_L(I) = 0) of I.

    ``semiprime`` overrides the certificate; by default it is the Killing
    criterion in characteristic 0 and unknown over F_p.  Without it the
    essential verdict is decided only in the cases that need no
    semiprimeness: I = L, or a nonzero Ann(I) meeting I trivially (then
    Ann(I) is an ideal missing I).
    """
    graded = is_graded_subspace(g, I)
    ideal = graded and is_ideal(L, I)
    A = ann(L, I)
    if semiprime is None and L.field.characteristic == 0 and L.is_lie:
        semiprime = killing_form(L).rank() == L.dim
    if not ideal:
        return GradedIdealTests(graded, False, False, A, "not a graded ideal")
    if I == whole(L):
        return GradedIdealTests(graded, True, True, A, "the whole algebra")
    if semiprime:
        return GradedIdealTests(graded, True, A.dim == 0, A, "semiprime: essential iff Ann(I) = 0")
    if A.dim and (A & I).dim == 0:
        return GradedIdealTests(graded, True, False, A, "Ann(I) is a nonzero ideal meeting I in 0")
    return GradedIdealTests(graded, True, INCONCLUSIVE, A, "no semiprimeness certificate")
