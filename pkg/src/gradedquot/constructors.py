"""Standard fixture algebras: M_n, gl_n, sl_n, so, sp, triangular, direct sums."""

from __future__ import annotations

from typing import Optional, Sequence

from .algebra import ASSOCIATIVE, LIE, AlgebraError, FinAlgebra
from .fields import QQ, Field
from .linalg import Coordinates, Matrix, Subspace, _sparse


def _label(i: int, j: int, n: int) -> str:
    return f"e{i}{j}" if n < 10 else f"e{i},{j}"


def unit_matrix(field: Field, n: int, i: int, j: int) -> Matrix:
    """E_ij with 1-based indices."""
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = 1
    return Matrix(field, tuple(tuple(r) for r in rows), n)


def _flat(M: Matrix) -> tuple:
    return M.flat()


def _unflat(field: Field, v: Sequence, n: int) -> Matrix:
    return Matrix(field, tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)), n)


def matrix_span_algebra(
    field: Field,
    n: int,
    basis: Sequence[Matrix],
    kind: str,
    labels: Optional[Sequence[str]] = None,
    involution_map=None,
    unit: Optional[Matrix] = None,
) -> FinAlgebra:
    """Algebra on a span of n x n matrices under the matrix product or commutator.

    ``involution_map`` (a function on matrices) induces an involution matrix
    when the span is stable under it.
    """
    coords = Coordinates(field, [_flat(b) for b in basis], n * n)
    struct = {}
    for a, A in enumerate(basis):
        for b, B in enumerate(basis):
            P = A @ B
            if kind == LIE:
                P = P - B @ A
            c = coords(_flat(P))
            if any(c):
                struct[(a, b)] = _sparse(c)
    inv = None
    if involution_map is not None:
        cols = [coords(_flat(involution_map(B))) for B in basis]
        inv = Matrix.from_columns(field, cols, len(basis))
    u = coords(_flat(unit)) if unit is not None else None
    alg = FinAlgebra(field, len(basis), kind, struct, inv, u, labels)
    alg.matrix_basis = tuple(basis)
    alg.matrix_size = n
    return alg


def matrix_basis_units(field: Field, n: int) -> list[Matrix]:
    return [unit_matrix(field, n, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def full_matrix_algebra(n: int, field: Field = QQ, involution: Optional[str] = None, gram: Optional[Matrix] = None) -> FinAlgebra:
    """M_n over ``field`` with basis e_ij in row-major order.

    ``involution`` is None, "transpose", "symplectic" (adjoint for the
    alternating form y) or "gram" (adjoint x -> G^-1 x^t G for ``gram``).
    """
    basis = matrix_basis_units(field, n)
    labels = [_label(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)]
    inv_map = None
    if involution == "transpose":
        inv_map = Matrix.transpose
    elif involution in ("symplectic", "gram"):
        G = symplectic_form(field, n // 2) if involution == "symplectic" else gram
        if G is None:
            raise ValueError("gram involution needs a Gram matrix")
        _check_gram(G, symmetric=None)
        Ginv = G.inverse()
        inv_map = lambda X: Ginv @ X.transpose() @ G  # noqa: E731
    elif involution is not None:
        raise ValueError(f"unknown involution {involution!r}")
    return matrix_span_algebra(field, n, basis, ASSOCIATIVE, labels, inv_map, Matrix.identity(field, n))


def gl(n: int, field: Field = QQ) -> FinAlgebra:
    """gl_n = M_n^- in the matrix-unit basis."""
    basis = matrix_basis_units(field, n)
    labels = [_label(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)]
    return matrix_span_algebra(field, n, basis, LIE, labels)


def sl_basis(field: Field, n: int) -> tuple[list[Matrix], list[str]]:
    """Row-major matrix units with the diagonal slots holding h_i = e_ii - e_{i+1,i+1}."""
    basis, labels = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                basis.append(unit_matrix(field, n, i, j))
                labels.append(_label(i, j, n))
            elif i < n:
                basis.append(unit_matrix(field, n, i, i) - unit_matrix(field, n, i + 1, i + 1))
                labels.append(f"h{i}")
    return basis, labels


def sl(n: int, field: Field = QQ) -> FinAlgebra:
    basis, labels = sl_basis(field, n)
    return matrix_span_algebra(field, n, basis, LIE, labels)


def _check_gram(G: Matrix, symmetric: Optional[bool]) -> None:
    n = G.nrows
    if G.ncols != n:
        raise AlgebraError("Gram matrix must be square")
    if symmetric is True and G.transpose() != G:
        raise AlgebraError("Gram matrix is not symmetric")
    if symmetric is False:
        if G.transpose() != G.scale(-1) or any(G[i, i] for i in range(n)):
            raise AlgebraError("Gram matrix is not alternating")
    if G.rank() != n:
        raise AlgebraError("Gram matrix is singular")


def form_algebra_basis(G: Matrix) -> list[Matrix]:
    """Basis (canonical RREF) of {x : x^t G + G x = 0}."""
    field, n = G.field, G.nrows
    eqs = []
    # (x^t G + G x)[i][j] = sum_k x[k][i] G[k][j] + G[i][k] x[k][j]
    for i in range(n):
        for j in range(n):
            eq = {}
            for k in range(n):
                if G[k, j]:
                    eq[k * n + i] = eq.get(k * n + i, 0) + G[k, j]
                if G[i, k]:
                    eq[k * n + j] = eq.get(k * n + j, 0) + G[i, k]
            eqs.append({a: b for a, b in eq.items() if b})
    from .linalg import nullspace

    return [_unflat(field, v, n) for v in nullspace(field, eqs, n * n)]


def so(n: int, gram: Optional[Matrix] = None, field: Field = QQ) -> FinAlgebra:
    """so(G) = {x : x^t G + G x = 0}; G defaults to the identity."""
    G = gram if gram is not None else Matrix.identity(field, n)
    _check_gram(G, symmetric=True)
    return matrix_span_algebra(G.field, n, form_algebra_basis(G), LIE)


def symplectic_form(field: Field, m: int) -> Matrix:
    """y = diag((0 1; -1 0), ...) with m blocks."""
    n = 2 * m
    rows = [[0] * n for _ in range(n)]
    for b in range(m):
        rows[2 * b][2 * b + 1] = 1
        rows[2 * b + 1][2 * b] = -1
    return Matrix(field, tuple(tuple(r) for r in rows), n)


def sp(m: int, field: Field = QQ, gram: Optional[Matrix] = None) -> FinAlgebra:
    """sp_2m = {x : x^t y + y x = 0} for the block-diagonal alternating form y."""
    G = gram if gram is not None else symplectic_form(field, m)
    _check_gram(G, symmetric=False)
    return matrix_span_algebra(G.field, G.nrows, form_algebra_basis(G), LIE)


def upper_triangular(n: int, field: Field = QQ) -> FinAlgebra:
    """T_n, the associative algebra of upper-triangular matrices."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    basis = [unit_matrix(field, n, i, j) for i, j in pairs]
    return matrix_span_algebra(field, n, basis, ASSOCIATIVE, [_label(i, j, n) for i, j in pairs], None, Matrix.identity(field, n))


def borel(n: int, field: Field = QQ) -> FinAlgebra:
    """Upper-triangular n x n matrices under the commutator."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    basis = [unit_matrix(field, n, i, j) for i, j in pairs]
    return matrix_span_algebra(field, n, basis, LIE, [_label(i, j, n) for i, j in pairs])


def abelian(dim: int, field: Field = QQ) -> FinAlgebra:
    return FinAlgebra(field, dim, LIE, {}, labels=[f"a{i}" for i in range(dim)])


def nonabelian2(field: Field = QQ) -> FinAlgebra:
    """The 2-dimensional Lie algebra [e, f] = f."""
    return FinAlgebra(field, 2, LIE, {(0, 1): {1: 1}, (1, 0): {1: -1}}, labels=["e", "f"])


def sl2_affine(field: Field = QQ) -> FinAlgebra:
    """sl_2 acting on its natural module V = span(v1, v2), V abelian (dim 5)."""
    # basis h, e12, e21, v1, v2
    ops = sl_basis(field, 2)[0]
    labels = ["h1", "e12", "e21", "v1", "v2"]
    order = [0, 1, 2]  # sl_basis(2) gives h1, e12, e21
    struct = {}
    for a in order:
        for b in order:
            C = ops[a] @ ops[b] - ops[b] @ ops[a]
            coords = Coordinates(field, [o.flat() for o in ops], 4)(C.flat())
            if any(coords):
                struct[(a, b)] = _sparse(coords)
        for v in range(2):
            img = ops[a].column(v)
            if any(img):
                struct[(a, 3 + v)] = {3 + k: c for k, c in enumerate(img) if c}
                struct[(3 + v, a)] = {3 + k: -c for k, c in enumerate(img) if c}
    return FinAlgebra(field, 5, LIE, struct, labels=labels)


def direct_sum(*algebras: FinAlgebra) -> FinAlgebra:
    """Block direct sum; labels get a summand prefix."""
    if not algebras:
        raise ValueError("need at least one summand")
    field, kind = algebras[0].field, algebras[0].kind
    for A in algebras:
        if A.field != field or A.kind != kind:
            raise AlgebraError("summands must share field and kind")
    struct, labels, offset = {}, [], 0
    units = []
    invs = []
    for s, A in enumerate(algebras):
        for (i, j), entries in A.table.items():
            struct[(offset + i, offset + j)] = {offset + k: c for k, c in entries}
        labels.extend(f"{lab}_{s + 1}" for lab in A.labels)
        units.append(A.unit)
        invs.append(A.involution)
        offset += A.dim
    unit = None
    if all(u is not None for u in units):
        unit = tuple(c for u in units for c in u)
    inv = None
    if all(J is not None for J in invs):
        rows = []
        off = 0
        for A, J in zip(algebras, invs):
            for r in J.rows:
                rows.append((0,) * off + r + (0,) * (offset - off - A.dim))
            off += A.dim
        inv = Matrix(field, tuple(rows), offset)
    return FinAlgebra(field, offset, kind, struct, inv, unit, labels)


def block_of(index: int, blocks: Sequence[int]) -> int:
    """Block number (0 = top) containing the 1-based matrix index."""
    acc = 0
    for b, size in enumerate(blocks):
        acc += size
        if index <= acc:
            return b
    raise IndexError(index)


def matrix_element(A: FinAlgebra, X: Matrix) -> tuple:
    """Coordinates of the matrix X in an algebra built by matrix_span_algebra."""
    return Coordinates(A.field, [b.flat() for b in A.matrix_basis], A.matrix_size ** 2)(X.flat())


def as_matrix(A: FinAlgebra, x: Sequence) -> Matrix:
    n = A.matrix_size
    total = Matrix.zeros(A.field, n, n)
    for c, B in zip(x, A.matrix_basis):
        if c:
            total = total + B.scale(c)
    return total


def subspace_of_matrices(A: FinAlgebra, mats: Sequence[Matrix]) -> Subspace:
    return Subspace.span(A.field, A.dim, [matrix_element(A, X) for X in mats])
