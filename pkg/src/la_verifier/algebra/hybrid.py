# src/la_verifier/algebra/hybrid.py
"""
Hybrid numbers a + b*i + c*eps + d*h over a commutative scalar ring.

The scalar ring is duck-typed: Fraction for rational hybrids, QuadExt for
the Binet constants. Units multiply by the fixed table below:

    *   |  1     i        eps     h
    ----+--------------------------------
    1   |  1     i        eps     h
    i   |  i     -1       1-h     eps+i
    eps |  eps   1+h      0       -eps
    h   |  h     -eps-i   eps     1
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, List, Tuple

from la_verifier.algebra.scalars import QuadExt, surd_conjugate
from la_verifier.errors import NonInvertible

BASIS = ("1", "i", "eps", "h")

# UNIT_PRODUCTS[j][k] = components of basis_j * basis_k
UNIT_PRODUCTS: Tuple[Tuple[Tuple[int, int, int, int], ...], ...] = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 1, 0, 0), (-1, 0, 0, 0), (1, 0, 0, -1), (0, 1, 1, 0)),
    ((0, 0, 1, 0), (1, 0, 0, 1), (0, 0, 0, 0), (0, 0, -1, 0)),
    ((0, 0, 0, 1), (0, -1, -1, 0), (0, 0, 1, 0), (1, 0, 0, 0)),
)

# Sparse form: for each (j, k), the (component, sign) pairs with nonzero coefficient.
_MUL_TERMS: Tuple[Tuple[int, int, Tuple[Tuple[int, int], ...]], ...] = tuple(
    (j, k, tuple((l, c) for l, c in enumerate(UNIT_PRODUCTS[j][k]) if c))
    for j in range(4)
    for k in range(4)
    if any(UNIT_PRODUCTS[j][k])
)


def _is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction, QuadExt)) and not isinstance(value, bool)


def _normalize(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


class Hybrid:
    """Immutable hybrid number; multiplication is associative but not commutative."""

    __slots__ = ("re", "im_i", "im_eps", "im_h")

    def __init__(self, re: Any = 0, im_i: Any = 0, im_eps: Any = 0, im_h: Any = 0) -> None:
        self.re = _normalize(re)
        self.im_i = _normalize(im_i)
        self.im_eps = _normalize(im_eps)
        self.im_h = _normalize(im_h)

    @classmethod
    def scalar(cls, value: Any) -> "Hybrid":
        zero = value - value
        return cls(value, zero, zero, zero)

    @classmethod
    def unit(cls, name: str) -> "Hybrid":
        """One of the basis elements '1', 'i', 'eps', 'h'."""
        comps = [0, 0, 0, 0]
        comps[BASIS.index(name)] = 1
        return cls(*comps)

    @classmethod
    def from_components(cls, comps) -> "Hybrid":
        return cls(*comps)

    def components(self) -> Tuple[Any, Any, Any, Any]:
        return (self.re, self.im_i, self.im_eps, self.im_h)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.components())

    def map(self, fn: Callable[[Any], Any]) -> "Hybrid":
        return Hybrid(*(fn(c) for c in self.components()))

    # --- Ring operations ---

    def __add__(self, other: Any) -> "Hybrid":
        if isinstance(other, Hybrid):
            return Hybrid(self.re + other.re, self.im_i + other.im_i,
                          self.im_eps + other.im_eps, self.im_h + other.im_h)
        if _is_scalar(other):
            return Hybrid(self.re + other, self.im_i, self.im_eps, self.im_h)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Hybrid":
        if isinstance(other, Hybrid):
            return Hybrid(self.re - other.re, self.im_i - other.im_i,
                          self.im_eps - other.im_eps, self.im_h - other.im_h)
        if _is_scalar(other):
            return Hybrid(self.re - other, self.im_i, self.im_eps, self.im_h)
        return NotImplemented

    def __rsub__(self, other: Any) -> "Hybrid":
        if _is_scalar(other):
            return Hybrid(other - self.re, -self.im_i, -self.im_eps, -self.im_h)
        return NotImplemented

    def __neg__(self) -> "Hybrid":
        return Hybrid(-self.re, -self.im_i, -self.im_eps, -self.im_h)

    def __pos__(self) -> "Hybrid":
        return self

    def __mul__(self, other: Any) -> "Hybrid":
        if isinstance(other, Hybrid):
            return hybrid_mul(self, other)
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "Hybrid":
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: Any) -> "Hybrid":
        # Only division by a central scalar; hybrid division is not two-sided.
        if _is_scalar(other):
            return self.map(lambda c: c / other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Hybrid":
        if not isinstance(exponent, int):
            return NotImplemented
        return hybrid_pow(self, exponent)

    def scale(self, s: Any) -> "Hybrid":
        """s * self with the scalar on the left."""
        return Hybrid(s * self.re, s * self.im_i, s * self.im_eps, s * self.im_h)

    # --- Comparison ---

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Hybrid):
            return all(x == y for x, y in zip(self.components(), other.components()))
        if _is_scalar(other):
            return self.re == other and self.im_i == 0 and self.im_eps == 0 and self.im_h == 0
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_scalar():
            return hash(self.re)
        return hash(self.components())

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.components())

    def is_scalar(self) -> bool:
        return self.im_i == 0 and self.im_eps == 0 and self.im_h == 0

    def __reduce__(self):
        return (Hybrid, self.components())

    def __repr__(self) -> str:
        return f"Hybrid({self.re!s}, {self.im_i!s}, {self.im_eps!s}, {self.im_h!s})"

    def __str__(self) -> str:
        parts: List[str] = []
        for value, unit in zip(self.components(), ("", "i", "eps", "h")):
            if value == 0:
                continue
            text = str(value)
            if unit and isinstance(value, QuadExt) and not value.is_rational():
                text = f"({text})"
            parts.append(f"{text}{unit}" if unit else text)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    # --- Conjugations ---

    def conj(self) -> "Hybrid":
        return hybrid_conj(self)

    def character(self) -> Any:
        return character(self)

    def surd_conjugate(self) -> "Hybrid":
        return self.map(surd_conjugate)

    def rational_part(self) -> "Hybrid":
        """Drop the QuadExt wrapper once every surd part is zero."""
        return self.map(lambda c: c.to_rational() if isinstance(c, QuadExt) else c)

    def to_dict(self) -> Dict[str, Any]:
        from la_verifier.harness.reports import serialize_value
        return {
            "re": serialize_value(self.re),
            "i": serialize_value(self.im_i),
            "eps": serialize_value(self.im_eps),
            "h": serialize_value(self.im_h),
        }


def hybrid_mul(lhs: Hybrid, rhs: Hybrid) -> Hybrid:
    """Bilinear expansion of lhs * rhs over the unit table, order preserved."""
    x = lhs.components()
    y = rhs.components()
    acc: List[Any] = [0, 0, 0, 0]
    for j, k, terms in _MUL_TERMS:
        if x[j] == 0 or y[k] == 0:
            continue
        prod = x[j] * y[k]
        for l, sign in terms:
            acc[l] = acc[l] + prod if sign > 0 else acc[l] - prod
    return Hybrid(*acc)


def hybrid_conj(z: Hybrid) -> Hybrid:
    return Hybrid(z.re, -z.im_i, -z.im_eps, -z.im_h)


def character(z: Hybrid) -> Any:
    """a^2 + (b - c)^2 - c^2 - d^2, equal to z * conj(z)."""
    a, b, c, d = z.components()
    bc = b - c
    return a * a + bc * bc - c * c - d * d


def character_abs(z: Hybrid) -> Fraction:
    return abs(Fraction(character(z)))


def hybrid_inverse(z: Hybrid) -> Hybrid:
    c = character(z)
    if c == 0:
        raise NonInvertible(f"hybrid {z} has zero character")
    if isinstance(c, QuadExt):
        inv = c.inverse()
    else:
        inv = Fraction(1) / c
    return hybrid_conj(z).scale(inv)


def hybrid_pow(z: Hybrid, k: int) -> Hybrid:
    if k < 0:
        raise ValueError("hybrid powers need a non-negative exponent")
    one = z.re - z.re + 1
    result = Hybrid.scalar(one)
    for _ in range(k):
        result = result * z
    return result


def matrix_rep(z: Hybrid) -> Tuple[Tuple[Any, Any], Tuple[Any, Any]]:
    """a + b*i + c*eps + d*h -> [[a+c, b-c+d], [c-b+d, a-c]]."""
    a, b, c, d = z.components()
    return ((a + c, b - c + d), (c - b + d, a - c))


def det2(m: Tuple[Tuple[Any, Any], Tuple[Any, Any]]) -> Any:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat2_mul(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def unit_table() -> List[List[Hybrid]]:
    return [[Hybrid(*UNIT_PRODUCTS[j][k]) for k in range(4)] for j in range(4)]


ONE = Hybrid(1)
I = Hybrid(0, 1)
EPS = Hybrid(0, 0, 1)
H = Hybrid(0, 0, 0, 1)
PSI = Hybrid(1, 1, 1, 1)
