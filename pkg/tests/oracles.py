"""Independent reference computations used to confirm solver outputs.

Nothing here calls the package's linear algebra: the Leibniz system is
written out entry by entry and reduced with a small sparse eliminator.
Scalars are the algebra's own field elements (Fraction over Q).
"""


def _reduce(basis: dict, row: dict) -> dict:
    row = dict(row)
    while row:
        col = min(row)
        piv = basis.get(col)
        if piv is None:
            return row
        f = row[col]
        for c, v in piv.items():
            new = row.get(c, 0) - f * v
            if new:
                row[c] = new
            else:
                row.pop(c, None)
    return row


def sparse_rank(field, rows) -> int:
    basis: dict = {}
    for row in rows:
        r = _reduce(basis, {c: field(v) for c, v in row.items() if v})
        if r:
            col = min(r)
            inv = field.one / r[col]
            basis[col] = {c: v * inv for c, v in r.items()}
    return len(basis)


def structure_table(A) -> list:
    """prods[i][j] = coefficients of e_i e_j as a dict, from A.mul only."""
    n = A.dim
    units = [A.unit_vector(i) for i in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append({k: c for k, c in enumerate(A.mul(units[i], units[j])) if c})
        out.append(row)
    return out


def leibniz_rows(prods, n, pairs, extra=()):
    """Rows of D(e_i e_j) = D(e_i) e_j + e_i D(e_j); unknown D[r][m] has index r*n + m."""
    for i, j in pairs:
        rows: dict = {}

        def put(k, idx, v):
            r = rows.setdefault(k, {})
            r[idx] = r.get(idx, 0) + v

        for m, c in prods[i][j].items():
            for k in range(n):
                put(k, k * n + m, c)
        for r in range(n):
            for k, c in prods[r][j].items():
                put(k, r * n + i, -c)
            for k, c in prods[i][r].items():
                put(k, r * n + j, -c)
        yield from rows.values()
    yield from extra


def der_dim(A, extra_rows=()) -> int:
    """dim Der(A) = n^2 - rank of the Leibniz system."""
    n = A.dim
    prods = structure_table(A)
    if A.is_lie:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    else:
        pairs = [(i, j) for i in range(n) for j in range(n)]
    return n * n - sparse_rank(A.field, leibniz_rows(prods, n, pairs, extra_rows))


def involution_rows(A):
    """D J = J D for the involution matrix J (rows of J given by A.involution)."""
    n = A.dim
    J = A.involution.rows
    for a in range(n):
        for b in range(n):
            row: dict = {}
            # (D J)[a][b] - (J D)[a][b]
            for m in range(n):
                if J[m][b]:
                    row[a * n + m] = row.get(a * n + m, 0) + J[m][b]
                if J[a][m]:
                    row[m * n + b] = row.get(m * n + b, 0) - J[a][m]
            yield row


def sder_dim(A) -> int:
    return der_dim(A, involution_rows(A))


def center_dim(A) -> int:
    n = A.dim
    prods = structure_table(A)
    rows = []
    for j in range(n):
        for k in range(n):
            # sum_i x_i (e_i e_j - e_j e_i) for associative, x_i [e_i, e_j] for Lie
            row = {}
            for i in range(n):
                v = prods[i][j].get(k, 0) - (0 if A.is_lie else prods[j][i].get(k, 0))
                if v:
                    row[i] = v
            rows.append(row)
    return n - sparse_rank(A.field, rows)
