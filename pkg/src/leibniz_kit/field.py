"""Exact scalars over prime fields GF(p) and the rationals.

A :class:`FieldSpec` knows how to canonicalize raw values (``int`` in
``[0, p-1]`` or a reduced :class:`fractions.Fraction`) and how to do
arithmetic on them.  Matrices and algebras store raw canonical values for
speed; :class:`Scalar` is the user-facing wrapper with operator overloads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import DivisionByZero, FieldMismatch, InfiniteField, ZeroLambda

Raw = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field (``p`` set) or the rationals (``p is None``)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"GF({self.p}) is not a prime field")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(int(p))

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int:
        if self.p is None:
            raise InfiniteField("the rationals are infinite")
        return self.p

    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    # raw-value arithmetic; inputs are assumed canonical

    def normalize(self, x) -> Raw:
        """Canonical raw value for an int, Fraction, ``"n/d"`` string or Scalar."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} scalar used in {self}")
            return x.value
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, bool):
            x = int(x)
        if self.p is None:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"cannot interpret {x!r} as a rational")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"denominator {x.denominator} vanishes in {self}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, int):
            return x % self.p
        raise TypeError(f"cannot interpret {x!r} in {self}")

    @property
    def zero(self) -> Raw:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.p is not None else Fraction(1)

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a: Raw) -> Raw:
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        if self.p is not None:
            return pow(a, -1, self.p)
        return 1 / a

    def __call__(self, x) -> "Scalar":
        return Scalar(self, self.normalize(x))

    def to_json(self):
        return "rationals" if self.p is None else {"prime": self.p}

    @classmethod
    def from_json(cls, obj) -> "FieldSpec":
        if obj == "rationals":
            return cls.rationals()
        if isinstance(obj, dict) and set(obj) == {"prime"}:
            return cls.prime(int(obj["prime"]))
        raise ValueError(f'bad field descriptor {obj!r}; expected {{"prime": p}} or "rationals"')

    def raw_to_json(self, a: Raw):
        return int(a) if self.p is not None else str(a)


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)


QQ = FieldSpec.rationals()


@dataclass(frozen=True, eq=False)
class Scalar:
    field: FieldSpec
    value: Raw

    def _coerce(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
            return other.value
        return self.field.normalize(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * Scalar(self.field, self._coerce(other)).inverse()

    def __rtruediv__(self, other):
        return Scalar(self.field, self._coerce(other)) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.field.p is not None:
            return Scalar(self.field, pow(self.value, k, self.field.p))
        return Scalar(self.field, self.value**k)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.normalize(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field}({self.value})"

    def __str__(self):
        return str(self.value)

    def to_json(self):
        return self.field.raw_to_json(self.value)


def field_arith(F: FieldSpec, op: str, a: Scalar, b: Optional[Scalar] = None) -> Scalar:
    """Dispatch ``add``/``sub``/``mul``/``neg``/``inv`` by name."""
    for s in (a, b):
        if s is not None and s.field != F:
            raise FieldMismatch(f"{s.field} operand passed to {F}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown field operation {op!r}")


def _raw_sqrt(F: FieldSpec, a: Raw) -> Optional[Raw]:
    if F.p is not None:
        for r in range(F.p):
            if r * r % F.p == a:
                return r
        return None
    if a < 0:
        return None
    n, d = a.numerator, a.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def square_root(F: FieldSpec, a) -> Optional[Scalar]:
    """Smallest canonical ``r`` with ``r*r == a``, or ``None``."""
    r = _raw_sqrt(F, F.normalize(a))
    return None if r is None else Scalar(F, r)


def is_two_closed(F: FieldSpec) -> bool:
    # GF(p), p odd, has only (p-1)/2 nonzero squares; 2 is never a rational square
    return F.p == 2


def x2_plus_lambda_has_root(F: FieldSpec, lam) -> bool:
    lam = F.normalize(lam)
    if lam == 0:
        raise ZeroLambda("lambda must be nonzero")
    return _raw_sqrt(F, F.neg(lam)) is not None


def enumerate_scalars(F: FieldSpec) -> list[Scalar]:
    if F.p is None:
        raise InfiniteField("cannot enumerate the rationals")
    return [Scalar(F, v) for v in range(F.p)]


def iter_raw(F: FieldSpec) -> Iterator[int]:
    if F.p is None:
        raise InfiniteField("cannot enumerate the rationals")
    return iter(range(F.p))
