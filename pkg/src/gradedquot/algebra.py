"""Finite-dimensional associative and Lie algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .fields import Field, FieldMismatch
from .linalg import DimensionMismatch, Echelon, Matrix, Subspace, _sparse

ASSOCIATIVE = "associative"
LIE = "lie"


class AlgebraError(ValueError):
    """Structure data violates an algebra axiom.

    ``where`` names the failing basis triple or pair when there is one.
    """

    def __init__(self, message: str, where: Optional[tuple] = None):
        super().__init__(message)
        self.where = where


class FinAlgebra:
    """Algebra on field^dim with e_i * e_j = sum_k c[i][j][k] e_k.

    ``structure`` is any mapping ``(i, j) -> {k: c}``; zeros are dropped.
    Construction validates the axioms of ``kind`` (associativity, or
    alternation plus Jacobi), the involution and the unit, and raises
    :class:`AlgebraError` naming the offending basis triple.
    """

    def __init__(
        self,
        field: Field,
        dim: int,
        kind: str,
        structure: Mapping,
        involution: Optional[Matrix] = None,
        unit: Optional[Sequence] = None,
        labels: Optional[Sequence[str]] = None,
        validate: bool = True,
    ):
        if kind not in (ASSOCIATIVE, LIE):
            raise ValueError(f"unknown kind {kind!r}")
        self.field = field
        self.dim = dim
        self.kind = kind
        table: dict[tuple[int, int], tuple] = {}
        for (i, j), entries in structure.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise AlgebraError(f"structure index ({i}, {j}) outside dimension {dim}", (i, j))
            items = entries.items() if isinstance(entries, Mapping) else entries
            row = {}
            for k, c in items:
                if not 0 <= k < dim:
                    raise AlgebraError(f"structure index k={k} outside dimension {dim}", (i, j, k))
                c = field(c)
                if c:
                    row[k] = row.get(k, field.zero) + c
            row = {k: v for k, v in row.items() if v}
            if row:
                table[(i, j)] = tuple(sorted(row.items()))
        self.table = table
        if involution is not None:
            if involution.field != field:
                raise FieldMismatch("involution over a different field")
            if involution.shape != (dim, dim):
                raise DimensionMismatch("involution must be dim x dim")
        self.involution = involution
        self.unit = None if unit is None else tuple(field(v) for v in unit)
        if self.unit is not None and len(self.unit) != dim:
            raise DimensionMismatch("unit vector has the wrong length")
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise DimensionMismatch("one label per basis vector")
        if validate:
            self.validate()

    # -- basic arithmetic -------------------------------------------------

    @property
    def is_lie(self) -> bool:
        return self.kind == LIE

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def unit_vector(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        """Product (bracket, for Lie algebras) of coordinate vectors."""
        out: dict[int, object] = {}
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        table = self.table
        for i, a in xs:
            for j, b in ys:
                entries = table.get((i, j))
                if entries is None:
                    continue
                ab = a * b
                for k, c in entries:
                    out[k] = out[k] + ab * c if k in out else ab * c
        z = self.field.zero
        return tuple(self.field(out[k]) if k in out else z for k in range(self.dim))

    def basis_product(self, i: int, j: int) -> tuple:
        z = self.field.zero
        vec = [z] * self.dim
        for k, c in self.table.get((i, j), ()):
            vec[k] = c
        return tuple(vec)

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x*y (ad_x for Lie algebras); column j is x*e_j."""
        cols = [self.mul(x, self.unit_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_matrix(self, x: Sequence) -> Matrix:
        cols = [self.mul(self.unit_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def ad(self, x: Sequence) -> Matrix:
        if not self.is_lie:
            # the commutator map of the minus algebra
            return self.left_matrix(x) - self.right_matrix(x)
        return self.left_matrix(x)

    def structure_matrices(self) -> list[Matrix]:
        """Left multiplication matrices of the basis vectors."""
        return [self.left_matrix(self.unit_vector(i)) for i in range(self.dim)]

    # -- elements ----------------------------------------------------------

    def element(self, coeffs: Sequence) -> Element:
        return Element(self, coeffs)

    def basis(self, i) -> Element:
        if isinstance(i, str):
            i = self.labels.index(i)
        return Element(self, self.unit_vector(i))

    def __getitem__(self, label) -> Element:
        return self.basis(label)

    def one(self) -> Element:
        if self.unit is None:
            raise AlgebraError("algebra has no unit")
        return Element(self, self.unit)

    # -- validation --------------------------------------------------------

    def validate(self) -> None:
        n = self.dim
        e = [self.unit_vector(i) for i in range(n)]
        if self.is_lie:
            for i in range(n):
                if any(self.basis_product(i, i)):
                    raise AlgebraError(f"alternation fails: [e{i}, e{i}] != 0", (i, i, i))
                for j in range(i + 1, n):
                    a = self.basis_product(i, j)
                    b = self.basis_product(j, i)
                    if any(x + y for x, y in zip(a, b)):
                        raise AlgebraError(f"antisymmetry fails at ({i}, {j})", (i, j, j))
            # Jacobi is alternating once antisymmetry holds
            for i in range(n):
                for j in range(i + 1, n):
                    ij = self.basis_product(i, j)
                    for k in range(j + 1, n):
                        t1 = self.mul(ij, e[k])
                        t2 = self.mul(self.basis_product(j, k), e[i])
                        t3 = self.mul(self.basis_product(k, i), e[j])
                        if any(a + b + c for a, b, c in zip(t1, t2, t3)):
                            raise AlgebraError(f"Jacobi identity fails on ({i}, {j}, {k})", (i, j, k))
        else:
            for i in range(n):
                for j in range(n):
                    ij = self.basis_product(i, j)
                    for k in range(n):
                        left = self.mul(ij, e[k])
                        right = self.mul(e[i], self.basis_product(j, k))
                        if left != right:
                            raise AlgebraError(f"associativity fails on ({i}, {j}, {k})", (i, j, k))
        if self.unit is not None:
            for i in range(n):
                if self.mul(self.unit, e[i]) != e[i] or self.mul(e[i], self.unit) != e[i]:
                    raise AlgebraError(f"unit fails on e{i}", (i,))
        if self.involution is not None:
            self._validate_involution()

    def _validate_involution(self) -> None:
        J = self.involution
        n = self.dim
        if J @ J != Matrix.identity(self.field, n):
            raise AlgebraError("involution is not involutive")
        images = [J.column(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = J.apply(self.basis_product(i, j))
                if self.is_lie:
                    rhs = self.mul(images[i], images[j])
                else:
                    rhs = self.mul(images[j], images[i])
                if lhs != rhs:
                    what = "automorphism" if self.is_lie else "anti-multiplicative"
                    raise AlgebraError(f"involution is not {what} on ({i}, {j})", (i, j))

    def involute(self, x: Sequence) -> tuple:
        if self.involution is None:
            raise AlgebraError("algebra has no involution")
        return self.involution.apply(x)

    def __repr__(self):
        return f"FinAlgebra({self.kind}, dim={self.dim}, field={self.field})"

    def same_structure(self, other: FinAlgebra) -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.kind == other.kind
            and self.table == other.table
        )


def build_algebra(
    field: Field,
    dim: int,
    kind: str,
    structure: Mapping,
    involution=None,
    unit=None,
    labels=None,
) -> FinAlgebra:
    """Validated constructor; ``involution`` may be a Matrix or nested rows."""
    if involution is not None and not isinstance(involution, Matrix):
        involution = Matrix(field, tuple(tuple(r) for r in involution), dim)
    return FinAlgebra(field, dim, kind, structure, involution, unit, labels)


class Element:
    """Coordinates of an algebra element together with its algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: FinAlgebra, coeffs: Sequence):
        if len(coeffs) != algebra.dim:
            raise DimensionMismatch(f"{len(coeffs)} coordinates for a {algebra.dim}-dimensional algebra")
        self.algebra = algebra
        self.coeffs = tuple(algebra.field(c) for c in coeffs)

    def _same(self, other: Element) -> None:
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Element:
        return Element(self.algebra, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar) -> Element:
        s = self.algebra.field(scalar)
        return Element(self.algebra, tuple(s * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return product(self, other)
        return self.__rmul__(other)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = [
            (f"{c}*" if c != 1 else "") + lab
            for c, lab in zip(self.coeffs, self.algebra.labels)
            if c
        ]
        return " + ".join(terms) if terms else "0"


def product(x: Element, y: Element) -> Element:
    """x*y, which is the bracket [x, y] in a Lie algebra."""
    x._same(y)
    return Element(x.algebra, x.algebra.mul(x.coeffs, y.coeffs))


def bracket(x: Element, y: Element) -> Element:
    """[x, y]; for associative algebras this is xy - yx."""
    x._same(y)
    alg = x.algebra
    if alg.is_lie:
        return product(x, y)
    xy = alg.mul(x.coeffs, y.coeffs)
    yx = alg.mul(y.coeffs, x.coeffs)
    return Element(alg, tuple(a - b for a, b in zip(xy, yx)))


# -- derived constructions ------------------------------------------------


def minus_algebra(A: FinAlgebra) -> FinAlgebra:
    """A^- with bracket c'[i][j] = c[i][j] - c[j][i]."""
    if A.is_lie:
        raise AlgebraError("minus_algebra needs an associative algebra")
    struct = {}
    for i in range(A.dim):
        for j in range(A.dim):
            vec = [a - b for a, b in zip(A.basis_product(i, j), A.basis_product(j, i))]
            if any(vec):
                struct[(i, j)] = _sparse(vec)
    return FinAlgebra(A.field, A.dim, LIE, struct, None, None, A.labels)


def subalgebra(S: FinAlgebra, U: Subspace, labels=None) -> FinAlgebra:
    """Structure constants of S restricted to U, in U's RREF basis."""
    if U.ambient_dim != S.dim:
        raise DimensionMismatch("subspace of the wrong ambient dimension")
    struct = {}
    for a, u in enumerate(U.basis):
        for b, v in enumerate(U.basis):
            w = S.mul(u, v)
            if not U.contains(w):
                raise AlgebraError(f"subspace is not closed under the product at basis pair ({a}, {b})", (a, b))
            coords = U.coordinates(w)
            if any(coords):
                struct[(a, b)] = _sparse(coords)
    unit = None
    if S.unit is not None and U.contains(S.unit):
        unit = U.coordinates(S.unit)
    return FinAlgebra(S.field, U.dim, S.kind, struct, None, unit, labels)


def skew_part(A: FinAlgebra) -> FinAlgebra:
    """The Lie algebra K_A of skew elements x* = -x under the commutator."""
    if A.is_lie:
        raise AlgebraError("skew_part needs an associative algebra")
    if A.involution is None:
        raise AlgebraError("skew_part needs an involution")
    if A.field.characteristic == 2:
        raise AlgebraError("skew_part needs characteristic != 2")
    K = skew_subspace(A)
    return subalgebra(minus_algebra(A), K)


def skew_subspace(A: FinAlgebra) -> Subspace:
    J = A.involution
    return (J + Matrix.identity(A.field, A.dim)).nullspace()


def whole(S: FinAlgebra) -> Subspace:
    return Subspace.full(S.field, S.dim)


def span(S: FinAlgebra, vectors: Iterable) -> Subspace:
    vecs = [v.coeffs if isinstance(v, Element) else tuple(S.field(c) for c in v) for v in vectors]
    return Subspace.span(S.field, S.dim, vecs)


def products_span(S: FinAlgebra, X: Subspace, Y: Subspace) -> Subspace:
    """span{x*y : x in X, y in Y}."""
    return Subspace.span(S.field, S.dim, [S.mul(x, y) for x in X.basis for y in Y.basis])


def derived_algebra(L: FinAlgebra) -> Subspace:
    """[L, L] (or AA for associative algebras)."""
    W = whole(L)
    return products_span(L, W, W)


# -- annihilators -----------------------------------------------------------


def _solve_in(X: Subspace, conditions) -> Subspace:
    """{x in X : every linear condition vanishes}, as a subspace of the ambient space.

    ``conditions`` maps a basis vector of X to a list of output vectors; the
    map is assumed linear so the kernel is computed on X's coordinates.
    """
    field = X.field
    k = X.dim
    if k == 0:
        return X
    outputs = [conditions(u) for u in X.basis]
    ech = Echelon(k, field)
    n_out = len(outputs[0])
    for r in range(n_out):
        width = len(outputs[0][r])
        for c in range(width):
            row = {a: outputs[a][r][c] for a in range(k) if outputs[a][r][c]}
            if row:
                ech.add(row)
    vecs = []
    for sol in ech.nullspace():
        v = [field.zero] * X.ambient_dim
        for a, coef in sol.items():
            for idx, x in enumerate(X.basis[a]):
                if x:
                    v[idx] = v[idx] + coef * x
        vecs.append(v)
    return Subspace.span(field, X.ambient_dim, vecs)


def lie_annihilator(S: FinAlgebra, X: Subspace, Y: Subspace) -> Subspace:
    """Ann_X(Y) = {x in X : [x, Y] = 0}."""
    return _solve_in(X, lambda x: [_commutator(S, x, y) for y in Y.basis] or [S.zero_vector()])


def _commutator(S: FinAlgebra, x, y) -> tuple:
    if S.is_lie:
        return S.mul(x, y)
    return tuple(a - b for a, b in zip(S.mul(x, y), S.mul(y, x)))


def center(S: FinAlgebra) -> Subspace:
    W = whole(S)
    return lie_annihilator(S, W, W)


def lan(A: FinAlgebra, X: Subspace, within: Optional[Subspace] = None) -> Subspace:
    """{a : a x = 0 for all x in X}."""
    W = within or whole(A)
    return _solve_in(W, lambda a: [A.mul(a, x) for x in X.basis] or [A.zero_vector()])


def ran(A: FinAlgebra, X: Subspace, within: Optional[Subspace] = None) -> Subspace:
    """{a : x a = 0 for all x in X}."""
    W = within or whole(A)
    return _solve_in(W, lambda a: [A.mul(x, a) for x in X.basis] or [A.zero_vector()])


def ann(A: FinAlgebra, X: Subspace, within: Optional[Subspace] = None) -> Subspace:
    """lan ∩ ran for associative algebras; Ann_A(X) for Lie algebras."""
    if A.is_lie:
        return lie_annihilator(A, within or whole(A), X)
    return lan(A, X, within) & ran(A, X, within)


@dataclass(frozen=True)
class QAnnResult:
    member: bool
    witness: Optional[tuple] = None
    value: Optional[tuple] = None

    def __bool__(self):
        return self.member


def qann_member(L: FinAlgebra, x: Sequence, Y: Subspace) -> QAnnResult:
    """Whether [x, [x, Y]] = 0; otherwise a basis vector y of Y with [x,[x,y]] != 0."""
    if isinstance(x, Element):
        x = x.coeffs
    if Y.ambient_dim != L.dim:
        raise DimensionMismatch("subspace of the wrong ambient dimension")
    for y in Y.basis:
        v = _commutator(L, x, _commutator(L, x, y))
        if any(v):
            return QAnnResult(False, y, v)
    return QAnnResult(True)


# -- ideals and quotients ---------------------------------------------------


def ideal_closure(S: FinAlgebra, G: Subspace) -> Subspace:
    """Smallest two-sided ideal containing G, by saturation."""
    field = S.field
    ech = Echelon(S.dim, field)
    queue = []
    for v in G.basis:
        if ech.add(_sparse(v)):
            queue.append(v)
    basis = [S.unit_vector(i) for i in range(S.dim)]
    while queue:
        v = queue.pop()
        for b in basis:
            cands = [S.mul(b, v)] if S.is_lie else [S.mul(b, v), S.mul(v, b)]
            for w in cands:
                if any(w) and ech.add(_sparse(w)):
                    queue.append(w)
    return Subspace._from_echelon(field, ech)


def ideal_violation(S: FinAlgebra, I: Subspace) -> Optional[tuple]:
    """First (basis index, ideal vector, product) leaving I, or None when I is an ideal."""
    for i in range(S.dim):
        e = S.unit_vector(i)
        for v in I.basis:
            for w in ((S.mul(e, v),) if S.is_lie else (S.mul(e, v), S.mul(v, e))):
                if not I.contains(w):
                    return (i, v, w)
    return None


def is_ideal(S: FinAlgebra, I: Subspace) -> bool:
    return ideal_violation(S, I) is None


def quotient_by_ideal(S: FinAlgebra, I: Subspace) -> FinAlgebra:
    """S/I on the coset representatives given by the non-pivot unit vectors of I."""
    bad = ideal_violation(S, I)
    if bad is not None:
        i, v, w = bad
        raise AlgebraError(f"not an ideal: e{i} times an ideal vector leaves the subspace", (i,))
    P = quotient_map(S, I)
    reps = I.complement_basis()
    struct = {}
    for a, u in enumerate(reps):
        for b, v in enumerate(reps):
            w = P.apply(S.mul(u, v))
            if any(w):
                struct[(a, b)] = _sparse(w)
    unit = P.apply(S.unit) if S.unit is not None else None
    free = [c for c in range(S.dim) if c not in set(I.pivots)]
    labels = [S.labels[c] for c in free]
    return FinAlgebra(S.field, len(reps), S.kind, struct, None, unit, labels)


def quotient_map(S: FinAlgebra, I: Subspace) -> Matrix:
    """Projection S -> S/I in the coordinates used by quotient_by_ideal."""
    free = [c for c in range(S.dim) if c not in set(I.pivots)]
    cols = []
    for j in range(S.dim):
        r = I.residual(S.unit_vector(j))
        cols.append(tuple(r[c] for c in free))
    return Matrix.from_columns(S.field, cols, len(free))


def is_homomorphism(A: FinAlgebra, B: FinAlgebra, M: Matrix) -> bool:
    """Whether the linear map with matrix M (B.dim x A.dim) is multiplicative."""
    if M.shape != (B.dim, A.dim):
        raise DimensionMismatch("map has the wrong shape")
    images = [M.column(i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            if M.apply(A.basis_product(i, j)) != B.mul(images[i], images[j]):
                return False
    return True


def is_isomorphism(A: FinAlgebra, B: FinAlgebra, M: Matrix) -> bool:
    return A.dim == B.dim and M.rank() == A.dim and is_homomorphism(A, B, M)


# -- forms and certificates --------------------------------------------------


def killing_form(L: FinAlgebra) -> Matrix:
    """Gram matrix tr(ad_i ad_j) in the standard basis."""
    ads = [L.ad(L.unit_vector(i)) for i in range(L.dim)]
    n = L.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = ads[i] @ ads[j]
            row.append(sum((prod[k, k] for k in range(n)), L.field.zero))
        rows.append(tuple(row))
    return Matrix(L.field, tuple(rows), n)


def trace_form_radical(A: FinAlgebra) -> Subspace:
    """Jacobson radical of an associative algebra in characteristic 0.

    {x : tr(L_{xy}) = 0 for all y}, with L the left regular representation.
    """
    _char0(A)
    n = A.dim
    zero = A.field.zero
    t = [
        sum((c for i in range(n) for k, c in A.table.get((m, i), ()) if k == i), zero)
        for m in range(n)
    ]
    rows = []
    for j in range(n):
        row = []
        for m in range(n):
            row.append(sum((c * t[k] for k, c in A.table.get((m, j), ())), A.field.zero))
        rows.append(tuple(row))
    return Matrix(A.field, tuple(rows), n).nullspace()


def solvable_radical(L: FinAlgebra) -> Subspace:
    """Orthogonal of [L, L] under the Killing form (characteristic 0)."""
    _char0(L)
    K = killing_form(L)
    D = derived_algebra(L)
    if D.dim == 0:
        return whole(L)
    rows = [K.apply(d) for d in D.basis]
    return Matrix(L.field, tuple(rows), L.dim).nullspace()


def centroid(S: FinAlgebra) -> Subspace:
    """Linear maps phi with phi(xy) = phi(x)y = x phi(y), flattened row-major."""
    n = S.dim
    eqs = []

    def var(k, m):
        return k * n + m

    # phi(e_i e_j) - phi(e_i) e_j and phi(e_i e_j) - e_i phi(e_j), component k
    for i in range(n):
        for j in range(n):
            ij = S.table.get((i, j), ())
            for k in range(n):
                base = {}
                for m, c in ij:
                    base[var(k, m)] = base.get(var(k, m), 0) + c
                left = dict(base)
                right = dict(base)
                for m in range(n):
                    for kk, c in S.table.get((m, j), ()):
                        if kk == k:
                            left[var(m, i)] = left.get(var(m, i), 0) - c
                    for kk, c in S.table.get((i, m), ()):
                        if kk == k:
                            right[var(m, j)] = right.get(var(m, j), 0) - c
                for eq in (left, right):
                    eq = {a: b for a, b in eq.items() if b}
                    if eq:
                        eqs.append(eq)
    ech = Echelon(n * n, S.field)
    for eq in eqs:
        ech.add(eq)
    return Subspace.from_sparse(S.field, n * n, ech.nullspace())


def _char0(S: FinAlgebra) -> None:
    if S.field.characteristic != 0:
        raise ValueError(
            "trace-form and Killing criteria need characteristic 0; "
            "use the exhaustive F_p search for nondegeneracy instead"
        )


INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Certificates:
    radical: Subspace
    killing_nondegenerate: Optional[bool]
    semiprime: bool
    central_simple: object  # True, False or INCONCLUSIVE
    semisimple_associative: Optional[bool]
    only_essential_is_whole: bool


def certificates(S: FinAlgebra) -> Certificates:
    """Structure certificates in characteristic 0.

    Lie: semiprime iff the Killing form is nondegenerate; central simple iff
    additionally the centroid is one-dimensional.  Associative: radical by
    the trace form; central simple iff semisimple with one-dimensional center.
    """
    _char0(S)
    if S.is_lie:
        nondeg = killing_form(S).rank() == S.dim
        rad = Subspace.zero(S.field, S.dim) if nondeg else solvable_radical(S)
        if nondeg:
            cs = True if centroid(S).dim == 1 else INCONCLUSIVE
        else:
            cs = False
        return Certificates(rad, nondeg, nondeg, cs, None, nondeg)
    rad = trace_form_radical(S)
    semisimple = rad.dim == 0
    if semisimple:
        cs = True if center(S).dim == 1 else INCONCLUSIVE
    else:
        cs = False
    return Certificates(rad, None, semisimple, cs, semisimple, semisimple)
