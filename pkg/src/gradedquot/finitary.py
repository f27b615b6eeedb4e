"""Finitely supported infinite matrices and the finitary families sl, o, sp.

Indices are 1-based.  The orthogonal and symplectic families live in the
(u, v) model with interleaved indices: u_k is index 2k-1 and v_k is index
2k.  A block (a b; c d) in the (u, v) decomposition therefore reads

    a = entries (odd, odd)    b = entries (odd, even)
    c = entries (even, odd)   d = entries (even, even)

and the grading puts b in degree 1, c in degree -1 and the diagonal
blocks in degree 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction
from typing import Iterator, Optional

from .algebra import LIE, AlgebraError
from .constructors import matrix_span_algebra
from .fields import QQ, SQRT2, TOWER, Field, I
from .grading import ZGrading, validate_grading
from .linalg import Matrix, Subspace
from .report import FAIL, INCONCLUSIVE, PASS, Check, check


class SparseInfMatrix:
    """An infinite matrix with finitely many nonzero entries."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if i < 1 or j < 1:
                raise IndexError("indices are 1-based")
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def unit(cls, i: int, j: int, value=1) -> SparseInfMatrix:
        return cls({(i, j): value})

    @property
    def support(self) -> int:
        """Largest index carrying a nonzero entry (0 for the zero matrix)."""
        return max((max(k) for k in self.entries), default=0)

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        return isinstance(other, SparseInfMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __add__(self, other: SparseInfMatrix) -> SparseInfMatrix:
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return SparseInfMatrix(out)

    def __neg__(self):
        return SparseInfMatrix({k: -v for k, v in self.entries.items()})

    def __sub__(self, other: SparseInfMatrix) -> SparseInfMatrix:
        return self + (-other)

    def scale(self, c) -> SparseInfMatrix:
        return SparseInfMatrix({k: c * v for k, v in self.entries.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, PeriodicBandedMatrix):
            return other.rmul(self)
        rows: dict = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), u in self.entries.items():
            for j, v in rows.get(k, ()):
                out[(i, j)] = out[(i, j)] + u * v if (i, j) in out else u * v
        return SparseInfMatrix(out)

    def transpose(self) -> SparseInfMatrix:
        return SparseInfMatrix({(j, i): v for (i, j), v in self.entries.items()})

    def trace(self):
        return sum((v for (i, j), v in self.entries.items() if i == j), 0)

    def to_matrix(self, field: Field, n: int) -> Matrix:
        if self.support > n:
            raise IndexError(f"support {self.support} exceeds {n}")
        rows = [[field.zero] * n for _ in range(n)]
        for (i, j), v in self.entries.items():
            rows[i - 1][j - 1] = field(v)
        return Matrix(field, tuple(tuple(r) for r in rows), n)

    @classmethod
    def from_matrix(cls, M: Matrix) -> SparseInfMatrix:
        return cls({(i + 1, j + 1): v for i, r in enumerate(M.rows) for j, v in enumerate(r) if v})

    def __repr__(self):
        body = " + ".join(f"{v}*E{i},{j}" for (i, j), v in sorted(self.entries.items()))
        return f"SparseInfMatrix({body or '0'})"


E = SparseInfMatrix.unit


def bracket(x, y) -> SparseInfMatrix:
    return (x @ y) - (y @ x)


# -- row-column-finite periodic banded matrices -----------------------------------------


@dataclass(frozen=True)
class PeriodicBandedMatrix:
    """lam * 1 + periodic band + finite correction.

    ``table`` maps (r, d) to the entry at (i, i + d) for every row i with
    (i - 1) % period == r.  Entries that would fall on column < 1 are dropped.
    """

    lam: object = 0
    period: int = 1
    bandwidth: int = 0
    table: dict = dc_field(default_factory=dict)
    correction: SparseInfMatrix = dc_field(default_factory=SparseInfMatrix)

    def __post_init__(self):
        if self.period < 1 or self.bandwidth < 0:
            raise ValueError("period must be positive and bandwidth non-negative")
        for (r, d) in self.table:
            if not (0 <= r < self.period and abs(d) <= self.bandwidth):
                raise ValueError(f"table key {(r, d)} outside period {self.period} / bandwidth {self.bandwidth}")

    def entry(self, i: int, j: int):
        v = self.lam if i == j else 0
        v = v + self.table.get(((i - 1) % self.period, j - i), 0)
        return v + self.correction[(i, j)]

    def column(self, k: int) -> dict:
        """Nonzero entries q_{ik} of column k."""
        rows = set(range(max(1, k - self.bandwidth), k + self.bandwidth + 1))
        rows |= {i for (i, j) in self.correction.entries if j == k}
        out = {i: self.entry(i, k) for i in rows}
        return {i: v for i, v in out.items() if v}

    def row(self, k: int) -> dict:
        cols = set(range(max(1, k - self.bandwidth), k + self.bandwidth + 1))
        cols |= {j for (i, j) in self.correction.entries if i == k}
        out = {j: self.entry(k, j) for j in cols}
        return {j: v for j, v in out.items() if v}

    def __matmul__(self, s: SparseInfMatrix) -> SparseInfMatrix:
        out: dict = {}
        for (k, j), v in s.entries.items():
            for i, q in self.column(k).items():
                out[(i, j)] = out[(i, j)] + q * v if (i, j) in out else q * v
        return SparseInfMatrix(out)

    def rmul(self, s: SparseInfMatrix) -> SparseInfMatrix:
        """s @ self."""
        out: dict = {}
        for (i, k), v in s.entries.items():
            for j, q in self.row(k).items():
                out[(i, j)] = out[(i, j)] + v * q if (i, j) in out else v * q
        return SparseInfMatrix(out)

    def bracket(self, s: SparseInfMatrix) -> SparseInfMatrix:
        return (self @ s) - self.rmul(s)

    def scalar_value(self):
        """lam' when the matrix is lam' * 1, else None."""
        if self.correction or any(v for (r, d), v in self.table.items() if d):
            return None
        vals = {self.table.get((r, 0), 0) for r in range(self.period)}
        return self.lam + vals.pop() if len(vals) == 1 else None


def identity_rcf(lam=1) -> PeriodicBandedMatrix:
    return PeriodicBandedMatrix(lam=lam)


def symplectic_y() -> PeriodicBandedMatrix:
    """diag((0 1; -1 0), (0 1; -1 0), ...)."""
    return PeriodicBandedMatrix(0, 2, 1, {(0, 1): 1, (1, -1): -1})


def orthogonal_s() -> PeriodicBandedMatrix:
    """diag((0 1; 1 0), ...): the form with Gram (0 I; I 0) in (u, v) order."""
    return PeriodicBandedMatrix(0, 2, 1, {(0, 1): 1, (1, -1): 1})


# -- the families -----------------------------------------------------------------------


def _u(k: int) -> int:
    return 2 * k - 1


def _v(k: int) -> int:
    return 2 * k


@dataclass(frozen=True)
class FinitaryFamily:
    """``name`` is gl, sl, o or sp; ``n`` is the split index for sl."""

    name: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.name not in ("gl", "sl", "o", "sp"):
            raise ValueError(f"unknown family {self.name!r}")
        if self.name == "sl" and self.n is not None and self.n < 1:
            raise ValueError("split index must be positive")

    @property
    def graded(self) -> bool:
        return self.name in ("o", "sp") or (self.name == "sl" and self.n is not None)

    # membership

    def form(self) -> Optional[PeriodicBandedMatrix]:
        return {"o": orthogonal_s(), "sp": symplectic_y()}.get(self.name)

    def defining_identity(self, x: SparseInfMatrix) -> bool:
        """Trace zero for sl, x^t S + S x = 0 for o and sp."""
        if self.name == "gl":
            return True
        if self.name == "sl":
            return not x.trace()
        S = self.form()
        return not (S.rmul(x.transpose()) + (S @ x))

    def degree_of_entry(self, i: int, j: int) -> int:
        if self.name == "sl":
            return int(j > self.n) - int(i > self.n)
        # u = odd, v = even; b block (u, v) has degree 1
        return (j % 2 == 0) - (i % 2 == 0)

    def membership(self, x: SparseInfMatrix, degree: Optional[int] = None) -> bool:
        if not self.defining_identity(x):
            return False
        if degree is None:
            return True
        if not self.graded:
            raise AlgebraError(f"{self.name} has no grading here")
        return all(self.degree_of_entry(i, j) == degree for (i, j) in x.entries)

    # generators

    def size(self, N: int) -> int:
        """Matrix size of the level-N truncation (N pairs for o and sp)."""
        return 2 * N if self.name in ("o", "sp") else N

    def generators(self, degree: Optional[int], N: int) -> list[tuple[str, SparseInfMatrix]]:
        """Labelled homogeneous basis of the level-N truncation in one degree."""
        if degree is None:
            degs = (-1, 0, 1) if self.graded else (None,)
            return [g for d in degs for g in self._gens(d, N)]
        return self._gens(degree, N)

    def _gens(self, degree, N):
        name = self.name
        out = []
        if name in ("gl", "sl"):
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    if i == j:
                        continue
                    if degree is None or self.degree_of_entry(i, j) == degree:
                        out.append((f"e{i},{j}", E(i, j)))
            if degree in (None, 0):
                if name == "gl":
                    out += [(f"e{i},{i}", E(i, i)) for i in range(1, N + 1)]
                else:
                    out += [(f"h{i}", E(i, i) - E(i + 1, i + 1)) for i in range(1, N)]
            return out
        sign = 1 if name == "sp" else -1
        if degree == 0:
            for k in range(1, N + 1):
                for l in range(1, N + 1):
                    out.append((f"a{k},{l}", E(_u(k), _u(l)) - E(_v(l), _v(k))))
            return out
        row, col = (_u, _v) if degree == 1 else (_v, _u)
        tag = "b" if degree == 1 else "c"
        for k in range(1, N + 1):
            for l in range(k if sign == 1 else k + 1, N + 1):
                g = E(row(k), col(l)) if k == l else E(row(k), col(l)) + E(row(l), col(k), sign)
                out.append((f"{tag}{k},{l}", g))
        return out

    def random_member(self, rng: random.Random, degree: Optional[int], support: int, field: Field = QQ,
                      terms: int = 3) -> SparseInfMatrix:
        """A random nonzero combination of generators with support <= ``support``."""
        N = support // 2 if self.name in ("o", "sp") else support
        gens = [g for _, g in self.generators(degree, N)]
        if not gens:
            raise ValueError("no generators at this size")
        while True:
            x = SparseInfMatrix()
            for g in rng.sample(gens, min(terms, len(gens))):
                x = x + g.scale(_rand_scalar(rng, field))
            if x:
                return x

    def __str__(self):
        return f"{self.name}" + (f"(n={self.n})" if self.n is not None else "")


def _rand_scalar(rng: random.Random, field: Field):
    if field.kind == "Fp":
        return field(rng.randrange(1, field.p))
    v = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
    return field(v)


def random_sparse(rng: random.Random, support: int, field: Field = QQ, terms: int = 4) -> SparseInfMatrix:
    """A random nonzero element of gl with indices <= support."""
    while True:
        x = SparseInfMatrix()
        for _ in range(terms):
            x = x + E(rng.randint(1, support), rng.randint(1, support), _rand_scalar(rng, field))
        if x:
            return x


def family(kind: str, n: Optional[int] = None) -> FinitaryFamily:
    if kind == "sl" and n is None:
        n = 1
    return FinitaryFamily(kind, n)


# -- truncation ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Truncation:
    family: FinitaryFamily
    N: int
    algebra: object
    grading: ZGrading
    labels: tuple
    matrices: tuple  # SparseInfMatrix per basis vector
    degrees: tuple


def truncate(fam: FinitaryFamily, N: int, field: Field = QQ) -> Truncation:
    """The finite-dimensional subalgebra on the first indices, with its grading."""
    if fam.name == "sl" and fam.n is not None and N <= fam.n:
        raise ValueError("truncation size must exceed the split index")
    size = fam.size(N)
    gens, degs = [], []
    for d in ((-1, 0, 1) if fam.graded else (0,)):
        for lab, g in fam.generators(d if fam.graded else None, N):
            gens.append((lab, g))
            degs.append(d)
    mats = [g.to_matrix(field, size) for _, g in gens]
    labels = tuple(lab for lab, _ in gens)
    alg = matrix_span_algebra(field, size, mats, LIE, labels)
    comps = {}
    for idx, d in enumerate(degs):
        comps.setdefault(d, []).append(alg.unit_vector(idx))
    g = validate_grading(alg, comps)
    return Truncation(fam, N, alg, g, labels, tuple(g_ for _, g_ in gens), tuple(degs))


def truncation_embeds(fam: FinitaryFamily, N: int, field: Field = QQ) -> bool:
    """Level N sits inside level N + 1 with degrees preserved."""
    small, big = truncate(fam, N, field), truncate(fam, N + 1, field)
    index = {m: k for k, m in enumerate(big.matrices)}
    for m, d in zip(small.matrices, small.degrees):
        k = index.get(m)
        if k is None or big.degrees[k] != d:
            return False
    return True


# -- basis change over Q(i, sqrt2) -------------------------------------------------------


@dataclass(frozen=True)
class BasisChange:
    m: int
    P: Matrix  # columns u_1..u_m, v_1..v_m in e' coordinates
    gram: Matrix  # P^t P
    expected: Matrix
    gram_ok: bool


def basis_change_uv(m: int) -> BasisChange:
    """u_k = (e'_{2k-1} + i e'_{2k}) / sqrt2 and v_k = (e'_{2k-1} - i e'_{2k}) / sqrt2.

    The form has Gram matrix 1 on the e' basis.
    """
    F = TOWER
    n = 2 * m
    h = SQRT2 / 2  # 1/sqrt2
    cols = []
    for sgn in (1, -1):
        for k in range(1, m + 1):
            c = [F.zero] * n
            c[2 * k - 2] = h
            c[2 * k - 1] = sgn * I * h
            cols.append(tuple(c))
    P = Matrix.from_columns(F, cols, n)
    G = P.transpose() @ P
    Z, One = Matrix.zeros(F, m, m), Matrix.identity(F, m)
    expected = _blocks(F, Z, One, One, Z)
    return BasisChange(m, P, G, expected, G == expected)


def _blocks(F: Field, a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    top = [ra + rb for ra, rb in zip(a.rows, b.rows)]
    bot = [rc + rd for rc, rd in zip(c.rows, d.rows)]
    return Matrix(F, tuple(top + bot), a.ncols + b.ncols)


def _sub(M: Matrix, r0: int, c0: int, k: int) -> Matrix:
    return Matrix(M.field, tuple(tuple(M.rows[r0 + i][c0 + j] for j in range(k)) for i in range(k)), k)


def conjugate_skew(bc: BasisChange, x: Matrix) -> dict:
    """P^{-1} x P split into blocks a, b, c, d (block order u's then v's)."""
    y = bc.P.inverse() @ x @ bc.P
    m = bc.m
    return {"a": _sub(y, 0, 0, m), "b": _sub(y, 0, m, m), "c": _sub(y, m, 0, m), "d": _sub(y, m, m, m)}


def is_block_form_o(blocks: dict) -> bool:
    """d = -a^t with b and c skew."""
    a, b, c, d = blocks["a"], blocks["b"], blocks["c"], blocks["d"]
    return (d + a.transpose()).is_zero() and (b + b.transpose()).is_zero() and (c + c.transpose()).is_zero()


# -- checks ----------------------------------------------------------------------------------

L0GEN = "L_0 = [L_-1, L_1] for the finitary 3-gradings"
BLOCK = "block formula for [x,[x,y]] with x = diag(a_0, d_0)"
WITNESS = "finitary algebras are strongly nondegenerate"
RCF = "ad_q for row-column-finite q gives derivations, with kernel F 1"
GRADING = "finitary 3-gradings"


def _flatten(x: SparseInfMatrix, n: int, field: Field) -> tuple:
    out = [field.zero] * (n * n)
    for (i, j), v in x.entries.items():
        out[(i - 1) * n + (j - 1)] = field(v)
    return tuple(out)


def l0_bracket_generation(fam: FinitaryFamily, N: int, slack: int = 0, field: Field = QQ) -> list[Check]:
    """Each degree-0 basis element at level N lies in span [c, b] with generators at level N + slack."""
    pre = f"l0gen/{fam}/N={N}/s={slack}"
    M = N + slack
    n = fam.size(M)
    brackets = [bracket(c, b) for _, c in fam.generators(-1, M) for _, b in fam.generators(1, M)]
    span_ = Subspace.span(field, n * n, [_flatten(z, n, field) for z in brackets])
    for lab, a in fam.generators(0, N):
        if not span_.contains(_flatten(a, n, field)):
            return [Check(pre, L0GEN, FAIL, expected="in span", actual=span_.dim, witness=lab,
                          reason=f"{lab} is not a combination of brackets at level {M}")]
    return [check(pre, L0GEN, True, actual={"brackets_rank": span_.dim, "degree0": len(fam.generators(0, N))})]


def degree_additivity(fam: FinitaryFamily, pairs: int, seed: int, support: int = 6, field: Field = QQ) -> list[Check]:
    rng = random.Random(seed)
    for t in range(pairs):
        i, j = rng.choice((-1, 0, 1)), rng.choice((-1, 0, 1))
        x = fam.random_member(rng, i, support, field)
        y = fam.random_member(rng, j, support, field)
        z = bracket(x, y)
        ok = (not z) if abs(i + j) > 1 else fam.membership(z, i + j)
        if not ok:
            return [Check(f"additivity/{fam}", GRADING, FAIL, witness={"x": repr(x), "y": repr(y), "degrees": (i, j)})]
    return [check(f"additivity/{fam}", GRADING, True, actual=pairs)]


def check_truncation(fam: FinitaryFamily, N: int, field: Field = QQ) -> list[Check]:
    T = truncate(fam, N, field)
    dims = tuple(T.grading[k].dim for k in (-1, 0, 1))
    return [check(f"truncate/{fam}/N={N}", GRADING, set(T.grading.support) <= {-1, 0, 1},
                  actual={"dim": T.algebra.dim, "components": dims})]


def block_diag(a0: SparseInfMatrix, d0: SparseInfMatrix, n: int) -> SparseInfMatrix:
    return assemble(a0, SparseInfMatrix(), SparseInfMatrix(), d0, n)


def assemble(a, b, c, d, n: int) -> SparseInfMatrix:
    """(a b; c d) with the first block on indices 1..n."""
    out = {}
    for (i, j), v in a.entries.items():
        out[(i, j)] = v
    for (i, j), v in b.entries.items():
        out[(i, j + n)] = v
    for (i, j), v in c.entries.items():
        out[(i + n, j)] = v
    for (i, j), v in d.entries.items():
        out[(i + n, j + n)] = v
    return SparseInfMatrix(out)


def block_formula(a0, d0, a, b, c, d, n: int) -> SparseInfMatrix:
    """Blockwise [x, [x, y]] for x = diag(a0, d0) and y = (a b; c d)."""
    tl = bracket(a0, bracket(a0, a))
    tr = (a0 @ a0 @ b) - (a0 @ b @ d0).scale(2) + (b @ d0 @ d0)
    bl = (d0 @ d0 @ c) - (d0 @ c @ a0).scale(2) + (c @ a0 @ a0)
    br = bracket(d0, bracket(d0, d))
    return assemble(tl, tr, bl, br, n)


def block_azd_identity_check(samples: int, seed: int, field: Field = QQ, support: int = 4) -> list[Check]:
    rng = random.Random(seed)
    n = support
    for t in range(samples):
        a0, d0, a, b, c, d = (random_sparse(rng, support, field) if rng.random() > 0.1 else SparseInfMatrix()
                              for _ in range(6))
        x = block_diag(a0, d0, n)
        y = assemble(a, b, c, d, n)
        lhs = bracket(x, bracket(x, y))
        if lhs != block_formula(a0, d0, a, b, c, d, n):
            return [Check(f"block-identity/{field}", BLOCK, FAIL, witness={"sample": t})]
    return [check(f"block-identity/{field}", BLOCK, True, actual=samples)]


@dataclass(frozen=True)
class WitnessResult:
    status: str  # found | inconclusive
    witness: Optional[SparseInfMatrix] = None
    value: Optional[SparseInfMatrix] = None
    window: int = 0


def azd_witness_search_inf(x: SparseInfMatrix, window: int = 1, fam: Optional[FinitaryFamily] = None,
                           retries: int = 1) -> WitnessResult:
    """First y with [x, [x, y]] != 0 among matrix units (or family generators)
    on indices up to support(x) + window; the window doubles on each retry."""
    if not x:
        raise ValueError("x must be nonzero")
    w = window
    for _ in range(retries + 1):
        bound = x.support + w
        for y in _candidates(bound, fam):
            z = bracket(x, bracket(x, y))
            if z:
                return WitnessResult("found", y, z, w)
        w *= 2
    return WitnessResult(INCONCLUSIVE, None, None, w // 2)


def _candidates(bound: int, fam: Optional[FinitaryFamily]) -> Iterator[SparseInfMatrix]:
    if fam is None or fam.name == "gl":
        for i in range(1, bound + 1):
            for j in range(1, bound + 1):
                yield E(i, j)
        return
    N = (bound + 1) // 2 if fam.name in ("o", "sp") else bound
    for _, g in fam.generators(None, N):
        yield g


def finitary_snd_evidence(fam: Optional[FinitaryFamily], degree: Optional[int], samples: int, seed: int,
                          field: Field = QQ, support: int = 6) -> list[Check]:
    rng = random.Random(seed)
    name = f"snd/{fam or 'gl'}/deg={degree}/{field}"
    inconclusive = 0
    for _ in range(samples):
        x = random_sparse(rng, support, field) if fam is None else fam.random_member(rng, degree, support, field)
        r = azd_witness_search_inf(x, fam=fam)
        if r.status != "found":
            inconclusive += 1
            continue
        if fam is not None and not fam.membership(r.witness):
            return [Check(name, WITNESS, FAIL, witness=repr(r.witness), reason="witness outside the family")]
    if inconclusive:
        return [Check(name, WITNESS, INCONCLUSIVE, actual=inconclusive, reason="no witness inside the window")]
    return [Check(name, WITNESS, PASS, actual=samples)]


def rcf_derivation_check(q: PeriodicBandedMatrix, N: int, fam: Optional[FinitaryFamily] = None,
                         tag: str = "") -> list[Check]:
    """ad_q on the level-N generators of ``fam`` (default sl): finite support,
    family identity preserved, and zero exactly when q is scalar."""
    fam = fam or FinitaryFamily("sl")
    pre = f"rcf/{fam.name}{tag}"
    bound = fam.size(N) + q.bandwidth + q.correction.support
    moving = None
    out = []
    for lab, g in fam.generators(None, N):
        z = q.bracket(g)
        if z.support > max(bound, g.support + q.bandwidth + q.correction.support):
            out.append(Check(f"{pre}/finite", RCF, FAIL, witness=lab, actual=z.support))
            return out
        if not fam.defining_identity(z):
            out.append(Check(f"{pre}/identity", RCF, FAIL, witness=lab))
            return out
        if z and moving is None:
            moving = (lab, z)
    out.append(check(f"{pre}/finite-and-identity", RCF, True, actual=len(fam.generators(None, N))))
    scalar = q.scalar_value()
    if scalar is not None:
        out.append(check(f"{pre}/kernel", RCF, moving is None, expected="all brackets zero",
                         witness=moving and moving[0]))
    else:
        out.append(check(f"{pre}/kernel", RCF, moving is not None, expected="a generator moved",
                         witness=moving and {"generator": moving[0], "bracket": repr(moving[1])}))
    return out


def banded_sample() -> PeriodicBandedMatrix:
    """A period-3 banded matrix with a finite correction."""
    return PeriodicBandedMatrix(
        lam=2, period=3, bandwidth=2,
        table={(0, 1): 1, (1, -2): 3, (2, 0): -1, (2, 2): 5},
        correction=E(1, 4, 7) + E(5, 2, -1),
    )
