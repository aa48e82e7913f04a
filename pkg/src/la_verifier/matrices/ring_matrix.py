# src/la_verifier/matrices/ring_matrix.py
"""Dense matrices over an arbitrary (possibly noncommutative) ring, plus determinants."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from la_verifier.errors import NonSquare, ShapeMismatch


class RingMatrix:
    """Immutable row-major matrix; products keep lhs entries on the left."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Any]) -> None:
        entries = tuple(entries)
        if rows < 1 or cols < 1:
            raise ShapeMismatch(f"matrix needs positive dimensions, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "RingMatrix":
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("rows must be non-empty and of equal length")
        return cls(len(rows), len(rows[0]), (x for r in rows for x in r))

    @classmethod
    def column(cls, values: Sequence[Any]) -> "RingMatrix":
        return cls(len(values), 1, values)

    @classmethod
    def identity(cls, size: int, one: Any = Fraction(1)) -> "RingMatrix":
        zero = one - one
        return cls(size, size, (one if i == j else zero for i in range(size) for j in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int, zero: Any = Fraction(0)) -> "RingMatrix":
        return cls(rows, cols, [zero] * (rows * cols))

    # --- Access ---

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: Tuple[int, int]) -> Any:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn: Callable[[Any], Any]) -> "RingMatrix":
        return RingMatrix(self.rows, self.cols, (fn(x) for x in self.entries))

    # --- Arithmetic ---

    def _same_shape(self, other: "RingMatrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._same_shape(other)
        return RingMatrix(self.rows, self.cols, (x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._same_shape(other)
        return RingMatrix(self.rows, self.cols, (x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "RingMatrix":
        return self.map(lambda x: -x)

    def __mul__(self, other: Any) -> "RingMatrix":
        if isinstance(other, RingMatrix):
            return matmul(self, other)
        return self.map(lambda x: x * other)

    def __rmul__(self, other: Any) -> "RingMatrix":
        return self.map(lambda x: other * x)

    def power(self, k: int) -> "RingMatrix":
        if self.rows != self.cols:
            raise NonSquare(f"power of a {self.rows}x{self.cols} matrix")
        if k < 0:
            raise ValueError("matrix powers need a non-negative exponent")
        one = self.entries[0] - self.entries[0] + 1
        result = RingMatrix.identity(self.rows, one)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and all(x == y for x, y in zip(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __reduce__(self):
        return (RingMatrix, (self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"RingMatrix({self.to_rows()!r})"


def matmul(lhs: RingMatrix, rhs: RingMatrix) -> RingMatrix:
    if lhs.cols != rhs.rows:
        raise ShapeMismatch(f"cannot multiply {lhs.rows}x{lhs.cols} by {rhs.rows}x{rhs.cols}")
    out = []
    for i in range(lhs.rows):
        row = lhs.row(i)
        for j in range(rhs.cols):
            acc = row[0] * rhs[0, j]
            for k in range(1, lhs.cols):
                acc = acc + row[k] * rhs[k, j]
            out.append(acc)
    return RingMatrix(lhs.rows, rhs.cols, out)


def generic_determinant(mat: RingMatrix) -> Any:
    """First-column cofactor expansion, entry before minor: sum_i (-1)^i a_{i,0} det(M_{i,0}).

    Minors are memoized by their remaining row set, so banded matrices stay cheap.
    """
    if mat.rows != mat.cols:
        raise NonSquare(f"determinant of a {mat.rows}x{mat.cols} matrix")
    size = mat.rows
    zero = mat.entries[0] - mat.entries[0]
    one = zero + 1
    memo: Dict[Tuple[int, ...], Any] = {}

    def det(rows: Tuple[int, ...]) -> Any:
        if not rows:
            return one
        cached = memo.get(rows)
        if cached is not None:
            return cached
        col = size - len(rows)
        acc = zero
        for pos, i in enumerate(rows):
            entry = mat[i, col]
            if entry == 0:
                continue
            term = entry * det(rows[:pos] + rows[pos + 1:])
            acc = acc - term if pos % 2 else acc + term
        memo[rows] = acc
        return acc

    return det(tuple(range(size)))


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def permutation_determinant(mat: RingMatrix) -> Any:
    """Leibniz sum; meaningful for commutative entries only."""
    if mat.rows != mat.cols:
        raise NonSquare(f"determinant of a {mat.rows}x{mat.cols} matrix")
    zero = mat.entries[0] - mat.entries[0]
    total = zero
    for perm in itertools.permutations(range(mat.rows)):
        term = zero + 1
        for i, j in enumerate(perm):
            term = term * mat[i, j]
        total = total + term if _permutation_sign(perm) > 0 else total - term
    return total
