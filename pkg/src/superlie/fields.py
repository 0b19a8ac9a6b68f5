"""Exact coefficient fields: the rationals and prime fields F_p with p > 3.

Coefficient objects are self-contained: rationals are plain
:class:`fractions.Fraction`; prime-field elements carry their modulus and
implement the full arithmetic protocol (including mixed arithmetic with
ints), so polynomial code never needs to know which field it is working over.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """An element of F_p in least nonnegative residue form."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other: "FpElement | int") -> "FpElement":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError("mixed moduli")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"


class RationalField:
    """Exact rational coefficients."""

    name = "Q"
    characteristic = 0

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise FieldError(f"bad rational coefficient {text!r}") from None

    def one(self) -> Fraction:
        return Fraction(1)

    def zero(self) -> Fraction:
        return Fraction(0)

    def format(self, value: Fraction) -> str:
        return str(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """F_p with p a prime greater than 3."""

    def __init__(self, p: int):
        if p in (2, 3):
            raise FieldError("characteristic 2,3 unsupported")
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"
        self.characteristic = p

    def parse(self, text: str) -> FpElement:
        rational = RationalField().parse(text)
        num = FpElement(rational.numerator, self.p)
        den = FpElement(rational.denominator, self.p)
        if den == 0:
            raise FieldError(f"coefficient {text!r} has zero denominator mod {self.p}")
        return num / den

    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    def format(self, value: FpElement) -> str:
        return str(value.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_from_string(text: str):
    """Field named by ``"Q"`` or ``"Fp:<p>"``."""
    text = text.strip()
    if text == "Q":
        return RationalField()
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise FieldError(f"bad prime field spec {text!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field {text!r}")
