"""Derivation spaces, inner derivations, SDer, A(L) and the quotient drivers.

A derivation from a subalgebra T of S into S is stored as a dim S x dim T
matrix in the coordinates of a chosen domain basis of T.  The Leibniz rule
on all pairs of domain basis vectors is a sparse homogeneous linear system
in the matrix entries, solved exactly.  Optional per-basis-vector image
spaces restrict the unknowns, which is how degree-preserving derivations
are computed without solving for everything first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Callable, Optional, Sequence

from .algebra import (
    INCONCLUSIVE,
    AlgebraError,
    FinAlgebra,
    ann,
    center,
    certificates,
    derived_algebra,
    is_ideal,
    killing_form,
    minus_algebra,
    products_span,
    quotient_by_ideal,
    quotient_map,
    skew_subspace,
    subalgebra,
    whole,
)
from .fields import Field
from .grading import ZGrading
from .linalg import Coordinates, Echelon, Matrix, Subspace, _sparse
from .report import FAIL, Check, check, expect_equal
from .report import INCONCLUSIVE as R_INCONCLUSIVE


def _flat(M: Matrix) -> tuple:
    return M.flat()


def _combine(field: Field, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> tuple:
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] = out[i] + c * x
    return tuple(out)


@dataclass
class DerivationSpace:
    """Basis of Der(T, S) in the coordinates of ``domain_basis``."""

    codomain: FinAlgebra
    domain_basis: tuple
    basis: list  # Matrix, codomain.dim x len(domain_basis)
    graded_pieces: Optional[dict] = None
    _coords: Optional[Coordinates] = dc_field(default=None, repr=False)
    _lie: Optional[FinAlgebra] = dc_field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> Field:
        return self.codomain.field

    @property
    def domain(self) -> Subspace:
        return Subspace.span(self.field, self.codomain.dim, self.domain_basis)

    @property
    def is_endomorphic(self) -> bool:
        return self.domain == whole(self.codomain)

    def domain_coordinates(self, vec: Sequence) -> tuple:
        if self._coords is None:
            self._coords = Coordinates(self.field, self.domain_basis, self.codomain.dim)
        return self._coords(vec)

    def apply(self, M: Matrix, vec: Sequence) -> tuple:
        """Image of an ambient vector of the domain under the map M."""
        return M.apply(self.domain_coordinates(vec))

    def endomorphism(self, M: Matrix) -> Matrix:
        """M as a map in the standard coordinates (domain must be everything)."""
        S = self.codomain
        cols = [self.apply(M, S.unit_vector(j)) for j in range(S.dim)]
        return Matrix.from_columns(self.field, cols, S.dim)

    def endomorphisms(self) -> list[Matrix]:
        return [self.endomorphism(M) for M in self.basis]

    def as_subspace(self) -> Subspace:
        """Span of the basis maps, flattened in standard coordinates (endomorphic case)."""
        n = self.codomain.dim
        return Subspace.span(self.field, n * n, [_flat(E) for E in self.endomorphisms()])

    def combination(self, coeffs: Sequence) -> Matrix:
        S = self.codomain
        flat = _combine(self.field, coeffs, [_flat(M) for M in self.basis], S.dim * len(self.domain_basis))
        k = len(self.domain_basis)
        return Matrix(self.field, tuple(flat[r * k:(r + 1) * k] for r in range(S.dim)), k)

    def subspace_where(self, condition: Callable[[Matrix], Sequence]) -> DerivationSpace:
        """Derivations in the span satisfying the linear condition(M) = 0."""
        if not self.basis:
            return DerivationSpace(self.codomain, self.domain_basis, [])
        outs = [tuple(condition(M)) for M in self.basis]
        ech = Echelon(self.dim, self.field)
        for r in range(len(outs[0])):
            row = {a: outs[a][r] for a in range(self.dim) if outs[a][r]}
            if row:
                ech.add(row)
        sols = Subspace.from_sparse(self.field, self.dim, ech.nullspace())
        return DerivationSpace(self.codomain, self.domain_basis, [self.combination(c) for c in sols.basis])

    def lie_structure(self) -> FinAlgebra:
        """Der(S) as a Lie algebra under the commutator of maps."""
        if self._lie is not None:
            return self._lie
        if not self.is_endomorphic:
            raise AlgebraError("commutators need derivations of the whole algebra")
        ends = self.endomorphisms()
        n = self.codomain.dim
        coords = Coordinates(self.field, [_flat(E) for E in ends], n * n)
        struct = {}
        for a, X in enumerate(ends):
            for b, Y in enumerate(ends):
                c = coords(_flat(X @ Y - Y @ X))
                if any(c):
                    struct[(a, b)] = _sparse(c)
        self._lie = FinAlgebra(self.field, self.dim, "lie", struct)
        return self._lie

    def restrict(self, sub: Sequence[Sequence]) -> list[Matrix]:
        """Each basis map restricted to the vectors ``sub`` of the domain."""
        S = self.codomain
        out = []
        for M in self.basis:
            cols = [self.apply(M, v) for v in sub]
            out.append(Matrix.from_columns(self.field, cols, S.dim))
        return out


def leibniz_residual(S: FinAlgebra, domain_basis: Sequence, M: Matrix) -> Optional[tuple]:
    """First (a, b, residual) with delta(t_a t_b) != delta(t_a) t_b + t_a delta(t_b)."""
    coords = Coordinates(S.field, domain_basis, S.dim)
    images = [M.column(j) for j in range(M.ncols)]
    for a, x in enumerate(domain_basis):
        for b, y in enumerate(domain_basis):
            lhs = M.apply(coords(S.mul(x, y)))
            rhs = [u + v for u, v in zip(S.mul(images[a], y), S.mul(x, images[b]))]
            res = tuple(u - v for u, v in zip(lhs, rhs))
            if any(res):
                return (a, b, res)
    return None


def derivation_space(
    S: FinAlgebra,
    T: Optional[Subspace] = None,
    domain_basis: Optional[Sequence] = None,
    allowed: Optional[Sequence[Subspace]] = None,
) -> DerivationSpace:
    """Der(T, S) for a subalgebra (or ideal) T of S.

    ``domain_basis`` fixes the basis of T (default: RREF basis); ``allowed``
    gives, per domain basis vector, a subspace of S that must contain its
    image.
    """
    field, n = S.field, S.dim
    if domain_basis is None:
        T = T if T is not None else whole(S)
        domain_basis = T.basis
    domain_basis = tuple(tuple(field(c) for c in v) for v in domain_basis)
    T = Subspace.span(field, n, domain_basis)
    if T.dim != len(domain_basis):
        raise AlgebraError("domain basis is not independent")
    coords = Coordinates(field, domain_basis, n)
    k = len(domain_basis)
    prods = {}
    for a in range(k):
        for b in range(k):
            w = S.mul(domain_basis[a], domain_basis[b])
            if not T.contains(w):
                raise AlgebraError(f"domain is not a subalgebra: product of basis vectors {a}, {b} leaves it", (a, b))
            prods[(a, b)] = coords(w)
    # image parametrisation: delta(t_b) = sum_r y[b, r] * img[b][r]
    if allowed is None:
        imgs = [[S.unit_vector(i) for i in range(n)] for _ in range(k)]
    else:
        if len(allowed) != k:
            raise AlgebraError("one allowed image space per domain basis vector")
        imgs = [list(V.basis) for V in allowed]
    offset = [0]
    for b in range(k):
        offset.append(offset[-1] + len(imgs[b]))
    nvars = offset[-1]
    # products of image vectors with domain vectors, on both sides
    right = {(a, r, b): S.mul(imgs[a][r], domain_basis[b]) for a in range(k) for r in range(len(imgs[a])) for b in range(k)}
    left = {(a, b, r): S.mul(domain_basis[a], imgs[b][r]) for a in range(k) for b in range(k) for r in range(len(imgs[b]))}
    ech = Echelon(nvars, field)
    lie = S.is_lie
    for a in range(k):
        for b in range(a + 1 if lie else 0, k):
            rows: dict[int, dict] = {}

            def put(kk, var, coef):
                row = rows.setdefault(kk, {})
                new = row.get(var, 0) + coef
                if new:
                    row[var] = new
                else:
                    row.pop(var, None)

            for m, c in enumerate(prods[(a, b)]):
                if c:
                    for r, v in enumerate(imgs[m]):
                        for kk, x in enumerate(v):
                            if x:
                                put(kk, offset[m] + r, c * x)
            for r in range(len(imgs[a])):
                for kk, x in enumerate(right[(a, r, b)]):
                    if x:
                        put(kk, offset[a] + r, -x)
            for r in range(len(imgs[b])):
                for kk, x in enumerate(left[(a, b, r)]):
                    if x:
                        put(kk, offset[b] + r, -x)
            for row in rows.values():
                if row:
                    ech.add(row)
    sols = Subspace.from_sparse(field, nvars, ech.nullspace())
    basis = []
    for y in sols.basis:
        cols = [_combine(field, y[offset[b]:offset[b + 1]], imgs[b], n) for b in range(k)]
        basis.append(Matrix.from_columns(field, cols, n))
    return DerivationSpace(S, domain_basis, basis)


# -- inner derivations and A(L) ---------------------------------------------------------


def ad_matrix(S: FinAlgebra, x) -> Matrix:
    """ad_x (commutator for associative algebras) in standard coordinates."""
    return S.ad(x)


def inner_derivations(S: FinAlgebra, X: Optional[Subspace] = None) -> Subspace:
    """span{ad_x : x in X} inside the flattened endomorphism space."""
    X = X if X is not None else whole(S)
    n = S.dim
    return Subspace.span(S.field, n * n, [_flat(ad_matrix(S, x)) for x in X.basis])


def ad_kernel(S: FinAlgebra) -> Subspace:
    """{x : ad_x = 0}."""
    n = S.dim
    cols = [_flat(ad_matrix(S, S.unit_vector(i))) for i in range(n)]
    return Matrix.from_columns(S.field, cols, n * n).nullspace()


def multiplication_algebra(L: FinAlgebra) -> FinAlgebra:
    """Associative algebra of End(L) generated by the ad_x, by saturation."""
    from .constructors import matrix_span_algebra

    n = L.dim
    gens = [ad_matrix(L, L.unit_vector(i)) for i in range(n)]
    ech = Echelon(n * n, L.field)
    basis: list[Matrix] = []
    queue = []
    for G in gens:
        if ech.add(_sparse(_flat(G))):
            basis.append(G)
            queue.append(G)
    while queue:
        X = queue.pop()
        for G in gens:
            Y = G @ X
            if ech.add(_sparse(_flat(Y))):
                basis.append(Y)
                queue.append(Y)
    ident = Matrix.identity(L.field, n)
    span_ = Subspace.span(L.field, n * n, [_flat(B) for B in basis])
    unit = ident if span_.contains(_flat(ident)) else None
    return matrix_span_algebra(L.field, n, basis, "associative", None, None, unit)


def sderivations(A: FinAlgebra, D: Optional[DerivationSpace] = None) -> DerivationSpace:
    """Derivations commuting with the involution."""
    if A.involution is None:
        raise AlgebraError("sderivations needs an involution")
    if A.field.characteristic == 2:
        raise AlgebraError("sderivations needs characteristic != 2")
    D = D if D is not None else derivation_space(A)
    J = A.involution
    return D.subspace_where(lambda M: _flat(D.endomorphism(M) @ J - J @ D.endomorphism(M)))


# -- gradings ------------------------------------------------------------------------------


def graded_der_decompose(D: DerivationSpace, gT: ZGrading, gS: Optional[ZGrading] = None) -> dict:
    """Degree sigma piece: {delta : delta(T_tau) inside S_{tau+sigma} for all tau}.

    Stores the pieces on D and returns {sigma: DerivationSpace}; the key
    "exhaustive" is not used, compare the dimension sum with D.dim instead.
    """
    gS = gS or gT
    S = D.codomain
    zero = Subspace.zero(S.field, S.dim)
    tdeg = [k for k in gT.support]
    sdeg = [k for k in gS.support]
    if not tdeg:
        D.graded_pieces = {0: D}
        return D.graded_pieces
    sigmas = range(min(sdeg) - max(tdeg), max(sdeg) - min(tdeg) + 1)
    pieces = {}
    for s in sigmas:
        def cond(M, s=s):
            out = []
            for t in tdeg:
                target = gS.components.get(t + s, zero)
                for v in gT[t].basis:
                    out.extend(target.residual(D.apply(M, v)))
            return out

        P = D.subspace_where(cond)
        if P.dim:
            pieces[s] = P
    D.graded_pieces = pieces
    return pieces


def pieces_exhaust(D: DerivationSpace) -> bool:
    if D.graded_pieces is None:
        raise AlgebraError("decompose first")
    return sum(P.dim for P in D.graded_pieces.values()) == D.dim


def preserving_derivations(L: FinAlgebra, parts: Sequence[Subspace]) -> DerivationSpace:
    """Derivations of L mapping each part into itself; parts must decompose L.

    For a Z-grading the parts are the components and this is the
    degree-0 piece of Der(L).
    """
    basis = [v for P in parts for v in P.basis]
    allowed = [P for P in parts for _ in P.basis]
    if Subspace.span(L.field, L.dim, basis).dim != L.dim or len(basis) != L.dim:
        raise AlgebraError("parts do not decompose the algebra")
    return derivation_space(L, domain_basis=basis, allowed=allowed)


# -- the maximal quotient at desk scale -------------------------------------------------------

QM_REMARK = "no proper essential ideals: Q_m(L) = Der(L)"


@dataclass
class QmResult:
    status: str  # "certified" or "inconclusive"
    derivations: Optional[DerivationSpace]
    reason: str

    @property
    def dim(self) -> Optional[int]:
        return None if self.derivations is None else self.derivations.dim


def qm_compute(L: FinAlgebra) -> QmResult:
    """Der(L) tagged as Q_m(L) when L is certified to have only L as essential ideal."""
    if not L.is_lie:
        raise AlgebraError("qm_compute needs a Lie algebra")
    if L.field.characteristic != 0:
        return QmResult("inconclusive", None, "Killing certificate needs characteristic 0")
    cert = certificates(L)
    if not cert.only_essential_is_whole:
        return QmResult("inconclusive", None, "Killing form is degenerate; essential ideals not certified")
    D = derivation_space(L)
    D.lie_structure()
    return QmResult("certified", D, "Killing form nondegenerate: semisimple, every ideal a direct summand")


@dataclass(frozen=True)
class DerivationClass:
    """A derivation defined on an essential ideal, up to agreement on a smaller one."""

    algebra: FinAlgebra
    domain: Subspace
    images: tuple  # images of domain.basis
    degree: Optional[int] = None

    @classmethod
    def from_space(cls, D: DerivationSpace, M: Matrix, degree: Optional[int] = None) -> DerivationClass:
        dom = D.domain
        return cls(D.codomain, dom, tuple(D.apply(M, v) for v in dom.basis), degree)

    def apply(self, vec: Sequence) -> tuple:
        c = self.domain.coordinates(vec)
        return _combine(self.algebra.field, c, self.images, self.algebra.dim)

    def restrict(self, K: Subspace) -> DerivationClass:
        if not self.domain.includes(K):
            raise AlgebraError("restriction to a subspace outside the domain")
        return DerivationClass(self.algebra, K, tuple(self.apply(v) for v in K.basis), self.degree)

    def same_class(self, other: DerivationClass) -> bool:
        K = self.domain & other.domain
        return all(self.apply(v) == other.apply(v) for v in K.basis)

    def bracket(self, other: DerivationClass) -> DerivationClass:
        """(delta mu - mu delta) on (I cap J)^2."""
        L = self.algebra
        K = self.domain & other.domain
        K2 = products_span(L, K, K)
        imgs = tuple(
            tuple(a - b for a, b in zip(self.apply(other.apply(v)), other.apply(self.apply(v))))
            for v in K2.basis
        )
        deg = None if self.degree is None or other.degree is None else self.degree + other.degree
        return DerivationClass(L, K2, imgs, deg)


@dataclass
class ColimitResult:
    derivations: DerivationSpace
    minimal: Subspace
    injective: dict  # member index -> bool
    checks: list


def restriction_colimit(L: FinAlgebra, family: Sequence[Subspace]) -> ColimitResult:
    """Der(I_min, L) for a finite intersection-closed family of essential ideals."""
    if not family:
        raise AlgebraError("empty family")
    semiprime = L.field.characteristic == 0 and killing_form(L).rank() == L.dim
    if not semiprime:
        raise AlgebraError("restriction_colimit needs a certified semiprime algebra")
    for i, I in enumerate(family):
        if not is_ideal(L, I):
            raise AlgebraError(f"family member {i} is not an ideal", (i,))
        if ann(L, I).dim:
            raise AlgebraError(f"family member {i} is not essential", (i,))
    for I, J in itertools.combinations(family, 2):
        if (I & J) not in family:
            raise AlgebraError("family is not closed under intersection")
    I_min = family[0]
    for I in family[1:]:
        I_min = I_min & I
    D_min = derivation_space(L, I_min)
    checks, inj = [], {}
    for i, I in enumerate(family):
        D = derivation_space(L, I)
        restricted = D.restrict(I_min.basis)
        rank = Subspace.span(L.field, L.dim * max(1, I_min.dim), [_flat(M) for M in restricted]).dim if restricted else 0
        inj[i] = rank == D.dim
        checks.append(check(f"colimit/restriction-injective/{i}", "restriction between essential ideals",
                            inj[i], expected=D.dim, actual=rank))
    return ColimitResult(D_min, I_min, inj, checks)


# -- drivers for the quotient theorems -------------------------------------------------------

ZERO_A = "Q_m(A^-/Z_A) = Der(A) via inner derivations"
ZERO_B = "Q_m(K_A/Z_K) = SDer(A) via skew inner derivations"
ZERO_C = "Q_m(L)_0 = Q_m(L_0) for L = [A,A]/Z"
ZERO_D = "Q_m(L)_0 = Q_m(L_0) for L = K_A/Z"


def _inner_of_assoc(A: FinAlgebra, X: Subspace) -> Subspace:
    return inner_derivations(A, X)


def check_inner_exhaust(A: FinAlgebra, tag: str = "") -> list[Check]:
    """(a): a -> ad_a maps A onto Der(A) with kernel Z(A)."""
    pre = f"zero-component{tag}/a"
    D = derivation_space(A)
    Z = center(A)
    inner = _inner_of_assoc(A, whole(A))
    out = [
        expect_equal(f"{pre}/dim", ZERO_A, A.dim - Z.dim, D.dim),
        check(f"{pre}/surjective", ZERO_A, inner == D.as_subspace(), expected=D.dim, actual=inner.dim),
        expect_equal(f"{pre}/kernel-is-center", ZERO_A, Z, ad_kernel(A)),
    ]
    return out


def check_skew_inner_exhaust(A: FinAlgebra, tag: str = "") -> list[Check]:
    """(b): ad restricted to K_A maps onto SDer(A) with kernel Z(K_A)."""
    pre = f"zero-component{tag}/b"
    K = skew_subspace(A)
    KA = subalgebra(minus_algebra(A), K)
    SD = sderivations(A)
    inner = _inner_of_assoc(A, K)
    zk = center(KA).dim
    return [
        expect_equal(f"{pre}/dim", ZERO_B, KA.dim - zk, SD.dim),
        check(f"{pre}/surjective", ZERO_B, inner == SD.as_subspace(), expected=SD.dim, actual=inner.dim),
    ]


@dataclass
class ZeroComparison:
    der_zero: DerivationSpace  # degree-0 derivations of L
    der_L0: DerivationSpace  # Der(L_0)
    restriction_rank: int
    restrictions_are_derivations: bool
    kernel: Subspace  # restriction kernel, flattened endomorphisms of L
    ad_center: Subspace  # span{ad_z : z in Z(L_0)}, same ambient

    @property
    def injective(self) -> bool:
        return self.restriction_rank == self.der_zero.dim

    @property
    def kernel_is_ad_center(self) -> bool:
        return self.kernel == self.ad_center


def compare_zero_component(L: FinAlgebra, parts: Sequence[Subspace], zero_part: int = 0) -> ZeroComparison:
    """Degree-0 derivations of L against Der(L_0), plus restriction to L_0."""
    D0 = preserving_derivations(L, parts)
    L0sub = parts[zero_part]
    L0 = subalgebra(L, L0sub)
    DL0 = derivation_space(L0)
    restricted = []
    ok = True
    for M in D0.basis:
        cols = [L0sub.coordinates(D0.apply(M, v)) for v in L0sub.basis]
        R = Matrix.from_columns(L.field, cols, L0.dim)
        if leibniz_residual(L0, [L0.unit_vector(i) for i in range(L0.dim)], R) is not None:
            ok = False
        restricted.append(R)
    n0 = L0.dim
    rank = Subspace.span(L.field, n0 * n0, [_flat(R) for R in restricted]).dim if restricted else 0
    # kernel of the restriction, as endomorphisms of L
    ker = D0.subspace_where(lambda M: [x for v in L0sub.basis for x in D0.apply(M, v)])
    n = L.dim
    kernel = Subspace.span(L.field, n * n, [_flat(E) for E in ker.endomorphisms()])
    Z0 = center(L0)
    zs = [_combine(L.field, z, L0sub.basis, n) for z in Z0.basis]
    ad_center = Subspace.span(L.field, n * n, [_flat(ad_matrix(L, z)) for z in zs])
    return ZeroComparison(D0, DL0, rank, ok, kernel, ad_center)


def _image_parts(S: FinAlgebra, P: Matrix, parts: Sequence[Subspace], dim: int) -> list[Subspace]:
    return [Subspace.span(S.field, dim, [P.apply(v) for v in V.basis]) for V in parts]


def lie_from_derived(A: FinAlgebra, g: ZGrading) -> tuple[FinAlgebra, list[Subspace]]:
    """L = [A,A]/Z([A,A]) with the components induced from g (degree order)."""
    Am = minus_algebra(A)
    D = derived_algebra(Am)
    Ls = subalgebra(Am, D)
    comps = [(k, D & g[k]) for k in g.support]
    parts = [Subspace.span(A.field, Ls.dim, [D.coordinates(v) for v in V.basis]) for _, V in comps if V.dim]
    degs = [k for k, V in comps if V.dim]
    return _mod_center(Ls, parts, degs)


def _mod_center(Ls: FinAlgebra, parts: list, degs: list) -> tuple[FinAlgebra, list[Subspace], list[int]]:
    Z = center(Ls)
    if Z.dim == 0:
        return Ls, parts, degs
    Q = quotient_by_ideal(Ls, Z)
    P = quotient_map(Ls, Z)
    images = _image_parts(Ls, P, parts, Q.dim)
    keep = [(d, V) for d, V in zip(degs, images) if V.dim]
    return Q, [V for _, V in keep], [d for d, _ in keep]


def lie_from_skew(A: FinAlgebra, g: ZGrading) -> tuple[FinAlgebra, list[Subspace], list, str]:
    """L = K_A/Z(K_A) with the decomposition induced from g.

    A degree-preserving involution gives a Z-grading of K_A by K cap A_k.
    A degree-reversing one (A_k* = A_{-k}) does not; K_A then splits only
    as (K cap A_0) + (K cap sum_{k != 0} A_k), and degree 0 means
    preserving both parts.
    """
    J = A.involution
    if J is None:
        raise AlgebraError("lie_from_skew needs an involution")
    preserving = all(g[k].includes(Subspace.span(A.field, A.dim, [J.apply(v) for v in g[k].basis])) for k in g.support)
    reversing = all(g[-k].includes(Subspace.span(A.field, A.dim, [J.apply(v) for v in g[k].basis])) for k in g.support)
    K = skew_subspace(A)
    KA = subalgebra(minus_algebra(A), K)
    if preserving:
        comps = [(k, K & g[k]) for k in g.support]
        mode = "preserving"
    elif reversing:
        rest = Subspace.zero(A.field, A.dim)
        for k in g.support:
            if k:
                rest = rest + g[k]
        comps = [(0, K & g[0]), ("nonzero", K & rest)]
        mode = "reversing"
    else:
        raise AlgebraError("involution neither preserves nor reverses the grading")
    parts = [Subspace.span(A.field, KA.dim, [K.coordinates(v) for v in V.basis]) for _, V in comps if V.dim]
    degs = [k for k, V in comps if V.dim]
    total = sum(V.dim for V in parts)
    if total != KA.dim:
        raise AlgebraError("skew part is not a sum of its homogeneous parts")
    L, parts, degs = _mod_center(KA, parts, degs)
    return L, parts, degs, mode


def check_zero_component_iso(
    A: FinAlgebra,
    g: ZGrading,
    tag: str = "",
    expected_c: Optional[int] = None,
    expected_d: Optional[int] = None,
    parts: str = "abcd",
) -> list[Check]:
    """Sub-checks (a)-(d) for a central simple graded associative algebra."""
    out: list[Check] = []
    cert = certificates(A)
    if cert.central_simple is not True:
        return [Check(f"zero-component{tag}/certificate", ZERO_A, R_INCONCLUSIVE, reason="A is not certified central simple")]
    if "a" in parts:
        out += check_inner_exhaust(A, tag)
    if "b" in parts and A.involution is not None:
        out += check_skew_inner_exhaust(A, tag)
    if "c" in parts:
        L, ps, degs = lie_from_derived(A, g)
        out += _zero_checks(L, ps, degs, f"zero-component{tag}/c", ZERO_C, expected_c)
    if "d" in parts and A.involution is not None:
        try:
            L, ps, degs, mode = lie_from_skew(A, g)
        except AlgebraError as exc:
            out.append(Check(f"zero-component{tag}/d/compatible", ZERO_D, FAIL, reason=str(exc)))
        else:
            out += _zero_checks(L, ps, degs, f"zero-component{tag}/d", ZERO_D, expected_d, mode)
    return out


def _zero_checks(L, ps, degs, pre, anchor, expected, mode="graded") -> list[Check]:
    if 0 not in degs:
        return [Check(f"{pre}/zero-component", anchor, FAIL, reason="no degree-0 part")]
    cmp = compare_zero_component(L, ps, degs.index(0))
    out = [
        expect_equal(f"{pre}/dims-agree", anchor, cmp.der_zero.dim, cmp.der_L0.dim,
                     reason=f"degree-0 Der(L) vs Der(L_0) ({mode})"),
        check(f"{pre}/restriction-injective", anchor, cmp.injective, expected=cmp.der_zero.dim, actual=cmp.restriction_rank,
              reason="" if cmp.injective else f"kernel of dimension {cmp.kernel.dim}: ad of the center of L_0"),
        check(f"{pre}/restriction-kernel-is-ad-center", anchor, cmp.kernel_is_ad_center,
              expected=cmp.ad_center.dim, actual=cmp.kernel.dim),
        check(f"{pre}/restrictions-are-derivations", anchor, cmp.restrictions_are_derivations),
    ]
    if expected is not None:
        out.append(expect_equal(f"{pre}/expected-dim", anchor, expected, cmp.der_zero.dim))
    return out


# -- inner ideals ----------------------------------------------------------------------------

INNER = "abelian minimal inner ideals"


@dataclass(frozen=True)
class InnerIdealTests:
    is_inner_ideal: bool
    is_abelian: bool
    minimal: object  # True, False or INCONCLUSIVE
    witness: Optional[tuple] = None  # basis of a smaller inner ideal


def is_inner_ideal(L: FinAlgebra, B: Subspace) -> bool:
    """[B, [B, L]] inside B."""
    BL = products_span(L, B, whole(L))
    return B.includes(products_span(L, B, BL))


def fp_subspaces(field: Field, d: int, k: int):
    """All k-dimensional subspaces of F_p^d, as RREF bases (deterministic order)."""
    elems = field.elements()
    one, zero = field.one, field.zero
    for pivots in itertools.combinations(range(d), k):
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, d) if c not in pivots]
        for values in itertools.product(elems, repeat=len(free)):
            rows = [[zero] * d for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = one
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield [tuple(r) for r in rows]


def inner_ideal_tests(L: FinAlgebra, B: Subspace, budget: int = 10 ** 5) -> InnerIdealTests:
    if not L.is_lie:
        raise AlgebraError("inner ideals are for Lie algebras")
    inner = is_inner_ideal(L, B)
    abelian = products_span(L, B, B).dim == 0
    if not inner or B.dim == 0:
        return InnerIdealTests(inner, abelian, False)
    if L.field.kind != "Fp":
        return InnerIdealTests(inner, abelian, INCONCLUSIVE)
    p, d = L.field.p, B.dim
    if p ** d > budget:
        return InnerIdealTests(inner, abelian, INCONCLUSIVE)
    for k in range(1, d):
        for rows in fp_subspaces(L.field, d, k):
            vecs = [_combine(L.field, r, B.basis, L.dim) for r in rows]
            C = Subspace.span(L.field, L.dim, vecs)
            if is_inner_ideal(L, C):
                return InnerIdealTests(inner, abelian, False, C.basis)
    return InnerIdealTests(inner, abelian, True)

