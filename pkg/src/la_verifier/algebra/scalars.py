# src/la_verifier/algebra/scalars.py
"""
Exact scalars: rationals (fractions.Fraction) and the formal quadratic
extension Q[t]/(t^2 - D) that holds the characteristic roots.

QuadExt works in the quotient ring, so it stays well defined when D is a
perfect square (the ring then has zero divisors and some elements are not
invertible).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Union

from la_verifier.errors import DiscriminantMismatch, DivisionByZero, InvalidParams, NonInvertible, SurdPartRemains

Scalar = Union[int, Fraction]

_RAT_OPS = ("add", "sub", "mul", "div")


def rat_arith(op: str, lhs: Scalar, rhs: Scalar) -> Fraction:
    """Exact rational arithmetic; the result is always in lowest terms."""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if rhs == 0:
            raise DivisionByZero(f"cannot divide {lhs} by zero")
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}; expected one of {_RAT_OPS}")


class QuadExt:
    """x + y*t with t^2 = D, over the rationals."""

    __slots__ = ("x", "y", "d")

    def __init__(self, x: Scalar, y: Scalar, d: Scalar) -> None:
        d = Fraction(d)
        if d == 0:
            raise InvalidParams("quadratic extension needs a nonzero discriminant")
        self.x = Fraction(x)
        self.y = Fraction(y)
        self.d = d

    # CONSTRUCTORS

    @classmethod
    def rational(cls, value: Scalar, d: Scalar) -> "QuadExt":
        return cls(value, 0, d)

    @classmethod
    def generator(cls, d: Scalar) -> "QuadExt":
        """The element t itself."""
        return cls(0, 1, d)

    def _coerce(self, other: Any) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DiscriminantMismatch(f"cannot combine D={self.d} with D={other.d}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt(other, 0, self.d)
        return None

    # SPECIAL METHODS

    def __add__(self, other: Any) -> "QuadExt":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadExt(self.x + rhs.x, self.y + rhs.y, self.d)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "QuadExt":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadExt(self.x - rhs.x, self.y - rhs.y, self.d)

    def __rsub__(self, other: Any) -> "QuadExt":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "QuadExt":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt(self.x * other, self.y * other, self.d)
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadExt(
            self.x * rhs.x + self.d * self.y * rhs.y,
            self.x * rhs.y + rhs.x * self.y,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "QuadExt":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise DivisionByZero("division of a quadratic element by zero")
            return QuadExt(self.x / other, self.y / other, self.d)
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: Any) -> "QuadExt":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.x, -self.y, self.d)

    def __pos__(self) -> "QuadExt":
        return self

    def __pow__(self, exponent: int) -> "QuadExt":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = QuadExt(1, 0, self.d)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, QuadExt):
            if self.x != other.x or self.y != other.y:
                return False
            return self.y == 0 or self.d == other.d
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.d))

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __repr__(self) -> str:
        return f"QuadExt({self.x!s}, {self.y!s}, d={self.d!s})"

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        sign = "-" if self.y < 0 else "+"
        return f"{self.x} {sign} {abs(self.y)}t"

    def __reduce__(self):
        return (QuadExt, (self.x, self.y, self.d))

    # PUBLIC METHODS

    def norm(self) -> Fraction:
        """x^2 - D*y^2, the product of the element with its surd conjugate."""
        return self.x * self.x - self.d * self.y * self.y

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise NonInvertible(f"{self} has norm x^2 - D*y^2 = 0 (D={self.d})")
        return QuadExt(self.x / n, -self.y / n, self.d)

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.x, -self.y, self.d)

    def is_rational(self) -> bool:
        return self.y == 0

    def to_rational(self) -> Fraction:
        """Rational part, refusing to drop a surviving surd part."""
        if self.y != 0:
            raise SurdPartRemains(f"{self} is not rational (surd part {self.y})")
        return self.x

    def to_dict(self) -> Dict[str, Any]:
        d = self.d.numerator if self.d.denominator == 1 else str(self.d)
        return {"x": str(self.x), "y": str(self.y), "D": d}


def quad_arith(op: str, lhs: QuadExt, rhs: QuadExt) -> QuadExt:
    """Ring operations on equal-discriminant QuadExt values."""
    if lhs.d != rhs.d:
        raise DiscriminantMismatch(f"cannot combine D={lhs.d} with D={rhs.d}")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}; expected one of {_RAT_OPS}")


def surd_conjugate(z: Any) -> Any:
    """(x, y) -> (x, -y); rationals are fixed points."""
    if isinstance(z, QuadExt):
        return z.conjugate()
    return z


def as_rational(value: Any) -> Fraction:
    """Collapse a scalar that must be rational (QuadExt with zero surd part, int or Fraction)."""
    if isinstance(value, QuadExt):
        return value.to_rational()
    return Fraction(value)
