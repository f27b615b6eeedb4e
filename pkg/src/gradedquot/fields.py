"""Exact scalar fields: the rationals, prime fields F_p, and Q(i, sqrt 2).

Every field object is a small frozen value.  Calling it coerces a Python
int, a :class:`~fractions.Fraction` or a ``"num/den"`` string into a field
element.  Elements support the usual arithmetic operators, so the linear
algebra in :mod:`gradedquot.linalg` is written once for all three towers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class FieldMismatch(TypeError):
    """Operands come from different field towers."""


@dataclass(frozen=True)
class Field:
    kind: str  # "Q", "Fp" or "tower"
    p: int = 0

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        if self.kind == "Q":
            if isinstance(value, str):
                return Fraction(value)
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, Fp):
                raise FieldMismatch(f"cannot coerce {value!r} into Q")
            if isinstance(value, QI2):
                if value.b or value.c or value.d:
                    raise FieldMismatch(f"{value!r} is not rational")
                return value.a
            raise TypeError(f"cannot coerce {type(value).__name__} into Q")
        if self.kind == "Fp":
            if isinstance(value, Fp):
                if value.p != self.p:
                    raise FieldMismatch(f"F_{value.p} element used in F_{self.p}")
                return value
            if isinstance(value, str):
                value = Fraction(value)
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
                num = value.numerator % self.p
                return Fp(num * pow(value.denominator, -1, self.p) % self.p, self.p)
            if isinstance(value, int):
                return Fp(value % self.p, self.p)
            raise TypeError(f"cannot coerce {type(value).__name__} into F_{self.p}")
        # tower
        if isinstance(value, QI2):
            return value
        if isinstance(value, str):
            return QI2.parse(value)
        if isinstance(value, (int, Fraction)):
            return QI2(Fraction(value))
        raise TypeError(f"cannot coerce {type(value).__name__} into Q(i, sqrt2)")

    def contains(self, value) -> bool:
        if self.kind == "Q":
            return isinstance(value, Fraction)
        if self.kind == "Fp":
            return isinstance(value, Fp) and value.p == self.p
        return isinstance(value, QI2)

    def format(self, value) -> str:
        """Canonical string form used by fixture files."""
        if self.kind == "Q":
            value = Fraction(value)
            return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        if self.kind == "Fp":
            return str(self(value).v)
        return self(value).format()

    def elements(self):
        """All elements, in the order 0, 1, ..., p-1 (finite fields only)."""
        if self.kind != "Fp":
            raise ValueError("only a prime field can be enumerated")
        return [Fp(v, self.p) for v in range(self.p)]

    def __str__(self) -> str:
        return {"Q": "Q", "Fp": f"F_{self.p}", "tower": "Q(i,sqrt2)"}[self.kind]

    def to_json(self) -> dict:
        if self.kind == "Fp":
            return {"kind": "Fp", "p": self.p}
        return {"kind": self.kind}

    @classmethod
    def from_json(cls, obj: dict) -> Field:
        kind = obj.get("kind")
        if kind == "Q":
            return QQ
        if kind == "tower":
            return TOWER
        if kind == "Fp":
            return GF(int(obj["p"]))
        raise ValueError(f"unknown field kind {kind!r}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Field("Fp", p)


QQ = Field("Q")
TOWER = Field("tower")


def field_of(value) -> Field:
    if isinstance(value, Fp):
        return GF(value.p)
    if isinstance(value, QI2):
        return TOWER
    return QQ


class Fp:
    """Element of a prime field, stored as its canonical residue in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp((self.v + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp((self.v - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp((o - self.v) % self.p, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Fp(self.v * pow(o, -1, self.p) % self.p, self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Fp(o * pow(self.v, -1, self.p) % self.p, self.p)

    def __neg__(self):
        return Fp(-self.v % self.p, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class QI2:
    """Element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt 2).

    Coefficients are Fractions.  Multiplication uses i^2 = -1 and
    sqrt2^2 = 2.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    @staticmethod
    def _lift(other):
        if isinstance(other, QI2):
            return other
        if isinstance(other, (int, Fraction)):
            return QI2(other)
        if isinstance(other, Fp):
            raise FieldMismatch("F_p element used in Q(i, sqrt2)")
        return None

    def coeffs(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QI2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QI2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QI2(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.coeffs()
        a2, b2, c2, d2 = o.coeffs()
        # basis 1, i, r, ir with i*i = -1, r*r = 2, (ir)*(ir) = -2
        a = a1 * a2 - b1 * b2 + 2 * c1 * c2 - 2 * d1 * d2
        b = a1 * b2 + b1 * a2 + 2 * c1 * d2 + 2 * d1 * c2
        c = a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2
        d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2
        return QI2(a, b, c, d)

    __rmul__ = __mul__

    def inverse(self) -> QI2:
        # write self = alpha + beta*i with alpha, beta in Q(sqrt2)
        alpha = (self.a, self.c)
        beta = (self.b, self.d)

        def mul2(x, y):
            return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

        norm = tuple(s + t for s, t in zip(mul2(alpha, alpha), mul2(beta, beta)))
        den = norm[0] * norm[0] - 2 * norm[1] * norm[1]
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
        inv_norm = (norm[0] / den, -norm[1] / den)
        re_ = mul2(alpha, inv_norm)
        im_ = mul2((-beta[0], -beta[1]), inv_norm)
        return QI2(re_[0], im_[0], re_[1], im_[1])

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate_i(self) -> QI2:
        """Image under i -> -i."""
        return QI2(self.a, -self.b, self.c, -self.d)

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, Fp) else None
        if o is None:
            return NotImplemented
        return self.coeffs() == o.coeffs()

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash(self.coeffs())

    def __repr__(self):
        return f"QI2({self.format()})"

    def format(self) -> str:
        parts = []
        for coef, name in zip(self.coeffs(), ("", "i", "r2", "ir2")):
            if not coef:
                continue
            text = QQ.format(coef)
            if name:
                text = f"{text}*{name}"
            parts.append(text)
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> QI2:
        """Parse the :meth:`format` output, e.g. ``"1/2 + -3*i + 1*r2"``."""
        total = cls()
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "*" in chunk:
                coef, name = chunk.split("*", 1)
            elif chunk.endswith(("ir2", "r2", "i")):
                name = next(n for n in ("ir2", "r2", "i") if chunk.endswith(n))
                coef = chunk[: -len(name)] or "1"
                coef = "-1" if coef == "-" else coef
            else:
                coef, name = chunk, ""
            value = Fraction(coef.strip())
            slot = {"": 0, "i": 1, "r2": 2, "ir2": 3}[name.strip()]
            vals = [0, 0, 0, 0]
            vals[slot] = value
            total = total + cls(*vals)
        return total


I = QI2(0, 1)
SQRT2 = QI2(0, 0, 1)


def projective_points(field: Field, dim: int):
    """Nonzero vectors of F_p^dim up to scaling, first nonzero coordinate 1.

    Yielded in lexicographic order of the coordinate tuples, so (0, ..., 0, 1)
    comes first and enumeration is deterministic.
    """
    elems = field.elements()
    one = elems[1]
    zero = elems[0]
    for lead in reversed(range(dim)):
        head = (zero,) * lead + (one,)
        for tail in itertools.product(elems, repeat=dim - lead - 1):
            yield head + tail
