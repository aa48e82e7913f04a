# src/la_verifier/errors.py
"""
Error hierarchy for the la_verifier package.

Every domain error derives from LaVerifierError, so callers (the CLI in
particular) can catch the whole family at once and map it to an exit code.
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple


class LaVerifierError(Exception):
    """Base class for all errors raised by la_verifier."""


# --- Arithmetic ---

class DivisionByZero(LaVerifierError, ArithmeticError):
    """Division of an exact scalar by zero."""


class NonInvertible(LaVerifierError, ArithmeticError):
    """An element has no inverse in its ring (zero norm or zero character)."""


class DiscriminantMismatch(LaVerifierError, ArithmeticError):
    """Two quadratic-extension values with different discriminants were combined."""


class SurdPartRemains(LaVerifierError, ArithmeticError):
    """A value expected to be rational still carries a nonzero surd part."""


# --- Parameters ---

class InvalidParams(LaVerifierError, ValueError):
    """Sequence parameters violate p^2 + 4q != 0 or have the wrong type."""


class DegenerateParameters(LaVerifierError, ValueError):
    """A closed form needs rho = 1 - p - q != 0 but rho is zero."""


class ZeroCoefficient(LaVerifierError, ValueError):
    """A recurrence coefficient that the construction divides by is zero."""


# --- Matrices ---

class NonSquare(LaVerifierError, ValueError):
    """Determinant requested for a non-square matrix."""


class ShapeMismatch(LaVerifierError, ValueError):
    """Matrix operands are not conformable."""


# --- Identity DSL ---

class DslSyntaxError(LaVerifierError, ValueError):
    """Malformed identity source, with its position and the tokens that would have been accepted."""

    def __init__(self, message: str, line: int, column: int, expected: Iterable[str] = ()) -> None:
        self.line = line
        self.column = column
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        self.reason = message
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f"; expected one of: {', '.join(self.expected)}"
        super().__init__(detail)


class UnboundVariable(LaVerifierError, ValueError):
    """An identity references a name with no binding."""

    def __init__(self, name: str, message: Optional[str] = None) -> None:
        self.name = name
        super().__init__(message or f"unbound variable '{name}'")


class IndexOutOfDomain(LaVerifierError, ValueError):
    """A sequence index resolved to a negative or non-integer value."""
