"""Exact linear algebra over a :class:`~gradedquot.fields.Field`.

Rows are handled internally as sparse ``{column: scalar}`` dicts, which keeps
the large, very sparse Leibniz systems from the derivation solver cheap.
Dense values exposed to callers are tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Iterable, Sequence

from .fields import Field, FieldMismatch


class DimensionMismatch(ValueError):
    pass


def _sparse(vec: Sequence) -> dict:
    return {i: v for i, v in enumerate(vec) if v}


def _axpy(row: dict, coef, other: dict) -> None:
    """row -= coef * other, dropping exact zeros."""
    for c, v in other.items():
        new = row.get(c)
        new = -coef * v if new is None else new - coef * v
        if new:
            row[c] = new
        else:
            row.pop(c, None)


class Echelon:
    """Incremental row echelon form with pivot = smallest column of each row.

    ``add`` reduces a row against the current pivots and keeps it when it is
    independent.  ``rref`` returns the reduced form, which is canonical for
    the span of everything added so far.
    """

    def __init__(self, ncols: int, field: Field):
        self.ncols = ncols
        self.field = field
        self._one = field.one
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        done: set[int] = set()
        while True:
            cands = [c for c in row if c in self.pivots and c not in done]
            if not cands:
                return row
            c = min(cands)
            coef = row[c]
            _axpy(row, coef, self.pivots[c])
            done.add(c)

    def _reduce_leading(self, row: dict) -> dict:
        row = dict(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            _axpy(row, row[c], piv)
        return row

    def add(self, row: dict) -> bool:
        row = self._reduce_leading(row)
        if not row:
            return False
        c = min(row)
        inv = self._one / row[c]
        self.pivots[c] = {k: v * inv for k, v in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> list[tuple[int, dict]]:
        """Fully reduced rows sorted by pivot column."""
        done: dict[int, dict] = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for k in [k for k in row if k != c and k in done]:
                coef = row.get(k)
                if coef:
                    _axpy(row, coef, done[k])
            done[c] = row
        return [(c, done[c]) for c in sorted(done)]

    def nullspace(self) -> list[dict]:
        """Basis of {x : row . x = 0 for every row}, one vector per free column."""
        rows = self.rref()
        pivset = {c for c, _ in rows}
        free = [c for c in range(self.ncols) if c not in pivset]
        # column -> list of (pivot, coef) for back substitution
        by_col: dict[int, list] = {}
        for c, row in rows:
            for k, v in row.items():
                if k != c:
                    by_col.setdefault(k, []).append((c, v))
        basis = []
        for f in free:
            vec = {f: 1}
            for c, v in by_col.get(f, ()):
                vec[c] = -v
            basis.append(vec)
        return basis


def rref_rows(field: Field, rows: Iterable[Sequence], ncols: int) -> tuple[tuple, ...]:
    ech = Echelon(ncols, field)
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column system")
        ech.add(_sparse(r))
    return tuple(_dense(field, row, ncols) for _, row in ech.rref())


def _dense(field: Field, row: dict, n: int) -> tuple:
    zero = field.zero
    out = [zero] * n
    for k, v in row.items():
        out[k] = field(v)
    return tuple(out)


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple[tuple, ...]
    ncols: int = -1

    def __post_init__(self):
        ncols = self.ncols
        if ncols < 0:
            ncols = len(self.rows[0]) if self.rows else 0
            object.__setattr__(self, "ncols", ncols)
        rows = []
        for r in self.rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix")
            rows.append(tuple(self.field(v) for v in r))
        object.__setattr__(self, "rows", tuple(rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, m: int, n: int) -> Matrix:
        return cls(field, tuple((0,) * n for _ in range(m)), n)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> Matrix:
        return cls(field, tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> Matrix:
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def _check(self, other: Matrix) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
            zero = self.field.zero
            out = []
            for r in self.rows:
                nz = [(k, v) for k, v in enumerate(r) if v]
                out.append(tuple(sum((v * col[k] for k, v in nz), zero) for col in cols))
            return Matrix(self.field, tuple(out), other.ncols)
        return self.apply(other)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        zero = self.field.zero
        nz = [(k, v) for k, v in enumerate(vec) if v]
        return tuple(sum((r[k] * v for k, v in nz), zero) for r in self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(-1)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        return Matrix(self.field, tuple(tuple(c * v for v in r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return not any(v for r in self.rows for v in r)

    def flat(self) -> tuple:
        return tuple(v for r in self.rows for v in r)

    def rank(self) -> int:
        ech = Echelon(self.ncols, self.field)
        for r in self.rows:
            ech.add(_sparse(r))
        return ech.rank

    def nullspace(self) -> Subspace:
        ech = Echelon(self.ncols, self.field)
        for r in self.rows:
            ech.add(_sparse(r))
        return Subspace.from_sparse(self.field, self.ncols, ech.nullspace())

    def inverse(self) -> Matrix:
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        ech = Echelon(2 * n, self.field)
        for i, r in enumerate(self.rows):
            row = _sparse(r)
            row[n + i] = self.field.one
            ech.add(row)
        rows = ech.rref()
        if len(rows) < n or rows[n - 1][0] >= n:
            raise ZeroDivisionError("matrix is singular")
        zero = self.field.zero
        return Matrix(self.field, tuple(tuple(row.get(n + j, zero) for j in range(n)) for _, row in rows[:n]), n)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"Matrix[{self.field}]({body})"


@dataclass(frozen=True)
class Subspace:
    """Subspace of field^ambient_dim stored by its reduced row-echelon basis.

    The RREF basis is canonical, so ``==`` is subspace equality.
    """

    field: Field
    ambient_dim: int
    basis: tuple[tuple, ...] = ()
    pivots: tuple[int, ...] = dc_field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.basis and len(self.pivots) != len(self.basis):
            piv = tuple(next(i for i, v in enumerate(r) if v) for r in self.basis)
            object.__setattr__(self, "pivots", piv)

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
        ech = Echelon(ambient_dim, field)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in {ambient_dim}-space")
            ech.add(_sparse(v))
        return cls._from_echelon(field, ech)

    @classmethod
    def from_sparse(cls, field: Field, ambient_dim: int, vectors: Iterable[dict]) -> Subspace:
        ech = Echelon(ambient_dim, field)
        for v in vectors:
            ech.add(v)
        return cls._from_echelon(field, ech)

    @classmethod
    def _from_echelon(cls, field: Field, ech: Echelon) -> Subspace:
        rows = ech.rref()
        basis = tuple(_dense(field, row, ech.ncols) for _, row in rows)
        return cls(field, ech.ncols, basis, tuple(c for c, _ in rows))

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: Field, n: int) -> Subspace:
        return cls.span(field, n, Matrix.identity(field, n).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def _check(self, other: Subspace) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient {self.ambient_dim} vs {other.ambient_dim}")

    def _echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim, self.field)
        for c, row in zip(self.pivots, self.basis):
            ech.pivots[c] = _sparse(row)
        return ech

    def residual(self, vec: Sequence) -> tuple:
        """vec minus its component along the pivot columns; zero iff vec is in the span."""
        if len(vec) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(vec)} in {self.ambient_dim}-space")
        return _dense(self.field, self._echelon().reduce(_sparse(vec)), self.ambient_dim)

    def contains(self, vec: Sequence) -> bool:
        return not any(self.residual(vec))

    def __contains__(self, vec) -> bool:
        return self.contains(vec)

    def coordinates(self, vec: Sequence) -> tuple:
        """Coordinates of vec in the RREF basis; raises ValueError when vec is outside."""
        if not self.contains(vec):
            raise ValueError("vector is not in the subspace")
        return tuple(self.field(vec[c]) for c in self.pivots)

    def includes(self, other: Subspace) -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def __le__(self, other: Subspace) -> bool:
        return other.includes(self)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient_dim)
        # a.U = b.V  <=>  (a, -b) in the left kernel of [U; V]
        k, n = self.dim, self.ambient_dim
        ech = Echelon(self.dim + other.dim, self.field)
        for col in range(n):
            row = {}
            for i, u in enumerate(self.basis):
                if u[col]:
                    row[i] = u[col]
            for j, v in enumerate(other.basis):
                if v[col]:
                    row[k + j] = -v[col]
            if row:
                ech.add(row)
        vecs = []
        for sol in ech.nullspace():
            vec = [self.field.zero] * n
            for i, a in sol.items():
                if i < k and a:
                    for c, x in enumerate(self.basis[i]):
                        if x:
                            vec[c] = vec[c] + a * x
            vecs.append(vec)
        return Subspace.span(self.field, n, vecs)

    def intersection(self, other: Subspace) -> Subspace:
        return self & other

    def quotient_basis(self, bigger: Subspace) -> tuple[tuple, ...]:
        """Vectors of ``bigger`` completing a basis of self to a basis of bigger."""
        self._check(bigger)
        if not bigger.includes(self):
            raise ValueError("quotient_basis needs self <= bigger")
        ech = self._echelon()
        out = []
        for v in bigger.basis:
            if ech.add(_sparse(v)):
                out.append(v)
        return tuple(out)

    def complement_basis(self) -> tuple[tuple, ...]:
        """Standard unit vectors on the non-pivot columns (a complement of self)."""
        piv = set(self.pivots)
        one, zero = self.field.one, self.field.zero
        return tuple(
            tuple(one if j == c else zero for j in range(self.ambient_dim))
            for c in range(self.ambient_dim)
            if c not in piv
        )

    def annihilator_equations(self) -> Matrix:
        """Matrix whose nullspace is exactly this subspace."""
        return self.as_matrix().nullspace().as_matrix()

    def as_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"


class Coordinates:
    """Coordinates with respect to an arbitrary independent list of vectors."""

    def __init__(self, field: Field, vectors: Sequence[Sequence], ambient_dim: int):
        self.field = field
        self.vectors = [tuple(field(x) for x in v) for v in vectors]
        self.k = len(self.vectors)
        self.n = ambient_dim
        # augment each vector with a unit tag to read off the combination
        ech = Echelon(ambient_dim + self.k, field)
        for i, v in enumerate(self.vectors):
            row = _sparse(v)
            row[ambient_dim + i] = field.one
            ech.add(row)
        rows = ech.rref()
        if any(c >= ambient_dim for c, _ in rows):
            raise ValueError("vectors are linearly dependent")
        self._rows = {c: row for c, row in rows}

    def __call__(self, vec: Sequence) -> tuple:
        """Coefficients a with sum a_i v_i = vec; ValueError when vec is not in the span."""
        n = self.n
        row = _sparse(vec)
        coeffs = {}
        for c in sorted(self._rows):
            coef = row.get(c)
            if not coef:
                continue
            _axpy(row, coef, self._rows[c])
        if any(k < n for k in row):
            raise ValueError("vector is not in the span")
        zero = self.field.zero
        # row now holds -(combination) on the tag columns
        for k, v in row.items():
            coeffs[k - n] = -v
        return tuple(coeffs.get(i, zero) for i in range(self.k))


def solve_linear(A: Matrix, b: Sequence):
    """Solve A x = b exactly.

    Returns ``(particular, nullspace)`` or ``None`` when the system is
    inconsistent.  ``particular`` is the solution with zeros on free columns.
    """
    if len(b) != A.nrows:
        raise DimensionMismatch(f"{A.nrows} rows but right-hand side of length {len(b)}")
    field = A.field
    bb = []
    for v in b:
        if not isinstance(v, int) and not field.contains(v):
            from .fields import field_of

            raise FieldMismatch(f"right-hand side in {field_of(v)} but matrix over {field}")
        bb.append(field(v))
    n = A.ncols
    ech = Echelon(n + 1, field)
    for r, rhs in zip(A.rows, bb):
        row = _sparse(r)
        if rhs:
            row[n] = rhs
        ech.add(row)
    rows = ech.rref()
    if any(c == n for c, _ in rows):
        return None
    x = [field.zero] * n
    for c, row in rows:
        x[c] = field(row.get(n, 0))
    null = Echelon(n, field)
    for c, row in rows:
        null.add({k: v for k, v in row.items() if k < n})
    return tuple(x), Subspace.from_sparse(field, n, null.nullspace())


def nullspace(field: Field, equations: Iterable[dict], nvars: int) -> list[tuple]:
    """Dense basis of the solution space of sparse homogeneous equations.

    The basis is the canonical RREF basis of the solution space.
    """
    ech = Echelon(nvars, field)
    for eq in equations:
        if eq:
            ech.add(eq)
    sol = Subspace.from_sparse(field, nvars, ech.nullspace())
    return list(sol.basis)
