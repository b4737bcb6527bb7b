"""Base rings and exact scalars.

Four rings are supported: the integers, the integers modulo ``n``, the
rationals, and univariate polynomials over the rationals.  Ring elements
are stored as plain Python values in canonical form:

========================  =============================================
ring                      raw value
========================  =============================================
``Z``                     ``int``
``Z/n``                   ``int`` in ``range(n)``
``Q``                     ``fractions.Fraction`` (always reduced)
``Q[t]``                  ``tuple`` of ``Fraction``, index = degree
========================  =============================================

Matrices and vectors hold raw values; :class:`Scalar` wraps a raw value
together with its ring for the public element API.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from ..errors import NonUnit, ParseError, RingMismatch, UnsupportedRing
from . import poly

INTEGERS = "Integers"
INTEGERS_MOD = "IntegersMod"
RATIONALS = "Rationals"
RATIONAL_POLYNOMIALS = "RationalPolynomials"

_KINDS = (INTEGERS, INTEGERS_MOD, RATIONALS, RATIONAL_POLYNOMIALS)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Integer extended gcd: ``(g, s, t)`` with ``s*a + t*b == g >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class BaseRing:
    kind: str
    modulus: int = 0
    _ops: Any = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise UnsupportedRing(f"unknown ring kind {self.kind!r}")
        if self.kind == INTEGERS_MOD:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise UnsupportedRing("IntegersMod(n) requires n >= 2")
        elif self.modulus:
            raise UnsupportedRing(f"{self.kind} takes no modulus")
        object.__setattr__(self, "_ops", _build_ops(self))

    # -- construction helpers ------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "BaseRing":
        """Parse ``Z``, ``Q``, ``Q[t]``, ``Z/n`` or ``Fp`` (p prime)."""
        s = str(text).strip().replace(" ", "")
        if s in ("Z", "ZZ"):
            return ZZ
        if s in ("Q", "QQ"):
            return QQ
        if s in ("Q[t]", "QQ[t]", "Qt"):
            return QQ_T
        try:
            if s.startswith("Z/"):
                return Zmod(int(s[2:]))
            if s.startswith("F") and s[1:].isdigit():
                p = int(s[1:])
                if not is_prime(p):
                    raise ParseError(f"F{p}: {p} is not prime")
                return Zmod(p)
            if s.isdigit():
                return Zmod(int(s))
        except UnsupportedRing as exc:
            raise ParseError(str(exc)) from exc
        raise ParseError(f"unrecognized ring {text!r}")

    def __str__(self) -> str:
        return {
            INTEGERS: "Z",
            RATIONALS: "Q",
            RATIONAL_POLYNOMIALS: "Q[t]",
        }.get(self.kind) or f"Z/{self.modulus}"

    # -- derived flags ---------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind == RATIONALS or (self.kind == INTEGERS_MOD and is_prime(self.modulus))

    @property
    def is_prime_modulus(self) -> bool:
        return self.kind == INTEGERS_MOD and is_prime(self.modulus)

    @property
    def is_finite(self) -> bool:
        return self.kind == INTEGERS_MOD

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == INTEGERS_MOD else 0

    def elements(self) -> Iterator[int]:
        if not self.is_finite:
            raise UnsupportedRing(f"{self} is infinite")
        return iter(range(self.modulus))

    # -- raw arithmetic (values assumed canonical) ---------------------

    @property
    def zero(self):
        return self._ops.zero

    @property
    def one(self):
        return self._ops.one

    def coerce(self, x):
        """Canonical raw value for ``x`` (int, Fraction, str, or sequence)."""
        return self._ops.coerce(x)

    def add(self, a, b):
        return self._ops.add(a, b)

    def sub(self, a, b):
        return self._ops.sub(a, b)

    def mul(self, a, b):
        return self._ops.mul(a, b)

    def neg(self, a):
        return self._ops.neg(a)

    def is_zero(self, a) -> bool:
        return a == self._ops.zero

    def is_unit(self, a) -> bool:
        k = self.kind
        if k == INTEGERS:
            return a in (1, -1)
        if k == INTEGERS_MOD:
            return math.gcd(a, self.modulus) == 1
        if k == RATIONALS:
            return a != 0
        return len(a) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NonUnit(f"{self.format(a)} is not a unit in {self}")
        k = self.kind
        if k == INTEGERS:
            return a
        if k == INTEGERS_MOD:
            return pow(a, -1, self.modulus)
        if k == RATIONALS:
            return 1 / a
        return (1 / a[0],)

    def power(self, a, e: int):
        out = self.one
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def from_int(self, n: int):
        return self._ops.coerce(n)

    # -- text encodings ---------------------------------------------------

    def format(self, a):
        """JSON-ready encoding: decimal/``p/q`` strings, or a list for Q[t]."""
        if self.kind == RATIONAL_POLYNOMIALS:
            return [str(c) for c in a]
        return str(a)

    def parse_scalar(self, obj):
        try:
            if self.kind == RATIONAL_POLYNOMIALS:
                if isinstance(obj, (list, tuple)):
                    return poly.strip(Fraction(str(c)) for c in obj)
                return poly.strip([Fraction(str(obj))])
            if self.kind == RATIONALS:
                return Fraction(str(obj))
            if isinstance(obj, bool) or not isinstance(obj, (str, int)):
                raise ParseError(f"bad scalar {obj!r} for {self}")
            return self.coerce(int(str(obj)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {obj!r} for {self}: {exc}") from exc

    def pretty(self, a) -> str:
        if self.kind == RATIONAL_POLYNOMIALS:
            return poly.to_str(a)
        return str(a)


class _Ops:
    __slots__ = ("zero", "one", "add", "sub", "mul", "neg", "coerce")


def _build_ops(ring: BaseRing) -> _Ops:
    ops = _Ops()
    k = ring.kind
    if k == INTEGERS:
        ops.zero, ops.one = 0, 1
        ops.add, ops.sub, ops.mul, ops.neg = operator.add, operator.sub, operator.mul, operator.neg

        def coerce(x):
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ParseError(f"{x} is not an integer")
                return int(x)
            return int(x)

        ops.coerce = coerce
    elif k == INTEGERS_MOD:
        n = ring.modulus
        ops.zero, ops.one = 0, 1
        ops.add = lambda a, b: (a + b) % n
        ops.sub = lambda a, b: (a - b) % n
        ops.mul = lambda a, b: (a * b) % n
        ops.neg = lambda a: (-a) % n

        def coerce(x):
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, n)) % n
            return int(x) % n

        ops.coerce = coerce
    elif k == RATIONALS:
        ops.zero, ops.one = Fraction(0), Fraction(1)
        ops.add, ops.sub, ops.mul, ops.neg = operator.add, operator.sub, operator.mul, operator.neg
        ops.coerce = lambda x: Fraction(x)
    else:
        ops.zero, ops.one = poly.ZERO, poly.ONE
        ops.add, ops.sub, ops.mul, ops.neg = poly.add, poly.sub, poly.mul, poly.neg

        def coerce(x):
            if isinstance(x, (tuple, list)):
                return poly.strip(x)
            return poly.strip([Fraction(x)])

        ops.coerce = coerce
    return ops


ZZ = BaseRing(INTEGERS)
QQ = BaseRing(RATIONALS)
QQ_T = BaseRing(RATIONAL_POLYNOMIALS)


def Zmod(n: int) -> BaseRing:
    return BaseRing(INTEGERS_MOD, n)


@dataclass(frozen=True)
class Scalar:
    """A ring element in canonical form; equality is representation equality."""

    ring: BaseRing
    value: Any

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.coerce(self.value))

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self) -> "Scalar":
        return Scalar(self.ring, self.ring.neg(self.value))

    def inv(self) -> "Scalar":
        return Scalar(self.ring, self.ring.inv(self.value))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def __str__(self) -> str:
        return self.ring.pretty(self.value)


def ring_ops(a: Scalar, b: Scalar | None, op: str) -> Scalar:
    """Apply ``op`` in {add, mul, neg, inv}; unary ops ignore ``b``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op!r}")
