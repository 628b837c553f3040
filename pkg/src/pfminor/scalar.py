"""Exact scalar arithmetic over three commutative rings.

The rings are arbitrary-precision integers, exact rationals, and residues
modulo a fixed m >= 2. Every operation is exact; nothing here touches
floating point. Values from different rings never mix silently: combining
them raises RingMismatchError.

Division is deliberately not part of the ring surface. The elimination
algorithms rely on exact_div, which either produces the unique quotient
or raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union


class RingMismatchError(TypeError):
    """Operands belong to different rings (or to different moduli)."""


class UnsupportedRingError(TypeError):
    """An algorithm refused the ring it was handed."""


class NonDivisibleError(ArithmeticError):
    """exact_div was asked for a quotient that does not exist in the ring."""


class Mod:
    """Residue modulo m, stored as the canonical representative in [0, m).

    Arithmetic only combines residues with equal moduli; anything else
    raises RingMismatchError. Instances are immutable by convention.
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        self.value = value % modulus
        self.modulus = modulus

    def _check(self, other: "Mod") -> "Mod":
        if not isinstance(other, Mod):
            raise RingMismatchError(
                f"cannot combine a residue mod {self.modulus} with {type(other).__name__}"
            )
        if other.modulus != self.modulus:
            raise RingMismatchError(
                f"cannot combine residues mod {self.modulus} and mod {other.modulus}"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        return Mod(self.value + other.value, self.modulus)

    def __sub__(self, other):
        other = self._check(other)
        return Mod(self.value - other.value, self.modulus)

    def __mul__(self, other):
        other = self._check(other)
        return Mod(self.value * other.value, self.modulus)

    def __neg__(self):
        return Mod(-self.value, self.modulus)

    def __eq__(self, other):
        if not isinstance(other, Mod):
            return NotImplemented
        return self.modulus == other.modulus and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.modulus})"

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


Scalar = Union[int, Fraction, Mod]


class Ring:
    """A commutative ring with exact equality and a text form for elements.

    Concrete rings supply zero/one, coercion from Python ints, strict
    membership validation, and parsing/printing of element literals.
    """

    name: str

    @property
    def token(self) -> str:
        """The ring's name as written in matrix file headers."""
        return self.name

    def from_int(self, k: int) -> Scalar:
        raise NotImplementedError

    def validate(self, x: Scalar) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def literal(self, x: Scalar) -> str:
        """Element text as written in matrix files (modulus left implicit)."""
        return str(x)

    def __str__(self):
        return self.token


@dataclass(frozen=True)
class IntegerRing(Ring):
    """Arbitrary-precision integers."""

    name = "int"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, k: int) -> int:
        return int(k)

    def validate(self, x: Scalar) -> int:
        if type(x) is not int:
            raise RingMismatchError(f"expected an integer scalar, got {type(x).__name__}")
        return x

    def parse(self, text: str) -> int:
        try:
            return int(text.strip())
        except ValueError:
            raise ValueError(f"not an integer literal: {text!r}") from None


@dataclass(frozen=True)
class RationalRing(Ring):
    """Exact rationals, always reduced with positive denominator."""

    name = "rat"

    @cached_property
    def zero(self) -> Fraction:
        return Fraction(0)

    @cached_property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def validate(self, x: Scalar) -> Fraction:
        if not isinstance(x, Fraction):
            raise RingMismatchError(f"expected a rational scalar, got {type(x).__name__}")
        return x

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational literal: {text!r}") from None


@dataclass(frozen=True)
class ModularRing(Ring):
    """Integers modulo a fixed m >= 2."""

    modulus: int
    name = "mod"

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @property
    def token(self) -> str:
        return f"mod {self.modulus}"

    @cached_property
    def zero(self) -> Mod:
        return Mod(0, self.modulus)

    @cached_property
    def one(self) -> Mod:
        return Mod(1, self.modulus)

    def from_int(self, k: int) -> Mod:
        return Mod(k, self.modulus)

    def validate(self, x: Scalar) -> Mod:
        if not isinstance(x, Mod):
            raise RingMismatchError(f"expected a residue scalar, got {type(x).__name__}")
        if x.modulus != self.modulus:
            raise RingMismatchError(
                f"expected a residue mod {self.modulus}, got one mod {x.modulus}"
            )
        return x

    def parse(self, text: str) -> Mod:
        parts = text.split()
        if len(parts) == 3 and parts[1] == "mod":
            if int(parts[2]) != self.modulus:
                raise ValueError(
                    f"literal {text!r} names modulus {parts[2]}, ring has modulus {self.modulus}"
                )
            parts = parts[:1]
        if len(parts) != 1:
            raise ValueError(f"not a residue literal: {text!r}")
        try:
            return Mod(int(parts[0]), self.modulus)
        except ValueError:
            raise ValueError(f"not a residue literal: {text!r}") from None

    def literal(self, x: Scalar) -> str:
        return str(self.validate(x).value)


ZZ = IntegerRing()
QQ = RationalRing()


def parse_ring(text: str) -> Ring:
    """Parse a ring token: ``int``, ``rat``, or ``mod <m>``."""
    parts = text.split()
    if parts == ["int"]:
        return ZZ
    if parts == ["rat"]:
        return QQ
    if len(parts) == 2 and parts[0] == "mod":
        try:
            m = int(parts[1])
        except ValueError:
            raise ValueError(f"bad modulus in ring token: {text!r}") from None
        return ModularRing(m)
    raise ValueError(f"unknown ring token: {text!r} (expected int, rat, or mod <m>)")


def ring_of(x: Scalar) -> Ring:
    """The ring a scalar belongs to."""
    if type(x) is int:
        return ZZ
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, Mod):
        return ModularRing(x.modulus)
    raise RingMismatchError(f"{type(x).__name__} is not a scalar")


def _check_same_kind(a: Scalar, b: Scalar) -> None:
    if type(a) is int and type(b) is int:
        return
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return
    if isinstance(a, Mod) and isinstance(b, Mod):
        if a.modulus != b.modulus:
            raise RingMismatchError(
                f"cannot combine residues mod {a.modulus} and mod {b.modulus}"
            )
        return
    raise RingMismatchError(
        f"cannot combine {type(a).__name__} and {type(b).__name__} scalars"
    )


def add(a: Scalar, b: Scalar) -> Scalar:
    _check_same_kind(a, b)
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _check_same_kind(a, b)
    return a * b


def neg(a: Scalar) -> Scalar:
    ring_of(a)
    return -a


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """The unique q with q * b == a, or an error when none exists.

    Over the rationals this is plain division. Over the integers the
    quotient must be exact. Over a modular ring the divisor must be
    invertible (always true for nonzero divisors and prime modulus).
    """
    _check_same_kind(a, b)
    if type(a) is int:
        if b == 0:
            raise ZeroDivisionError("exact_div by zero")
        q, r = divmod(a, b)
        if r:
            raise NonDivisibleError(f"{b} does not divide {a} exactly")
        return q
    if isinstance(a, Fraction):
        if b == 0:
            raise ZeroDivisionError("exact_div by zero")
        return a / b
    if b.value == 0:
        raise ZeroDivisionError("exact_div by zero")
    try:
        inv = pow(b.value, -1, b.modulus)
    except ValueError:
        raise NonDivisibleError(
            f"{b.value} is not invertible mod {b.modulus}"
        ) from None
    return Mod(a.value * inv, a.modulus)


def format_scalar(x: Scalar) -> str:
    """Display form: decimal integers, ``p/q`` rationals, ``v mod m`` residues."""
    ring_of(x)
    return str(x)
