# src/la_verifier/matrices/cereceda.py
"""
Bordered tridiagonal determinants for third-order sequences
x_{n+3} = u x_{n+2} + v x_{n+1} + w x_n with x_0 = A, x_1 = B, x_2 = C.

Readings of the (n+1)x(n+1) matrix, rows/columns from 0:

    printed            row 3 carries A at column 1; rows >= 4 are [1/w, -v/w, u, w]
    pattern-corrected  every row >= 3 is [1/w, -v/w, u, w]
    hybrid-printed     as printed, plus 1/2 at (4, 2)
    theorem            the scalar layout with ring-valued seeds (hybrid mode only)

Rows 0..2 are shared: [A, 1], [Au - B, u, 1/A], [0, Bu - C, u, w].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from la_verifier.algebra.hybrid import Hybrid, hybrid_inverse
from la_verifier.errors import NonInvertible, ZeroCoefficient
from la_verifier.matrices.ring_matrix import RingMatrix, generic_determinant
from la_verifier.schemas import IdentityReport, SeqParams
from la_verifier.sequences.hybrid import lah_by_definition
from la_verifier.sequences.scalar import la_terms

SCALAR_READINGS = ("printed", "pattern-corrected")
HYBRID_READINGS = ("printed", "pattern-corrected", "theorem")
MODES = ("scalar", "hybrid")


@dataclass(frozen=True)
class CerecedaParams:
    u: Fraction
    v: Fraction
    w: Fraction
    A: Any
    B: Any
    C: Any

    def __post_init__(self) -> None:
        if self.w == 0:
            raise ZeroCoefficient("w = 0: the bordered matrix divides by w")
        if self.A == 0:
            raise NonInvertible("x_0 = A must be nonzero")

    @property
    def is_hybrid(self) -> bool:
        return isinstance(self.A, Hybrid)

    def inverse_a(self) -> Any:
        if self.is_hybrid:
            return hybrid_inverse(self.A)
        return Fraction(1) / self.A


def leonardo_alwyn_cereceda_params(params: SeqParams, mode: str = "scalar") -> CerecedaParams:
    """u = 1+p, v = q-p, w = -q with seeds from the scalar or hybrid sequence."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    p, q = params.p, params.q
    if mode == "scalar":
        A, B, C = la_terms(params, 3)
    else:
        A, B, C = (lah_by_definition(params, m) for m in range(3))
    return CerecedaParams(u=1 + p, v=q - p, w=-q, A=A, B=B, C=C)


def cereceda_matrix(cp: CerecedaParams, n: int, reading: str = "printed") -> RingMatrix:
    readings = HYBRID_READINGS if cp.is_hybrid else SCALAR_READINGS
    if reading not in readings:
        raise ValueError(f"unknown reading {reading!r}; expected one of {readings}")
    if n < 0:
        raise ValueError("n must be >= 0")
    size = n + 1
    if cp.is_hybrid:
        embed = lambda x: x if isinstance(x, Hybrid) else Hybrid.scalar(Fraction(x))  # noqa: E731
    else:
        embed = Fraction
    u, v, w, A, B, C = cp.u, cp.v, cp.w, cp.A, cp.B, cp.C
    zero = embed(0)
    grid = [[zero] * size for _ in range(size)]

    def put(i: int, j: int, value: Any) -> None:
        if i < size and j < size:
            grid[i][j] = embed(value)

    put(0, 0, A)
    put(0, 1, 1)
    put(1, 0, A * u - B)
    put(1, 1, u)
    if size > 2:
        put(1, 2, cp.inverse_a())
    put(2, 1, B * u - C)
    put(2, 2, u)
    put(2, 3, w)
    for k in range(3, size):
        put(k, k - 2, Fraction(1) / w)
        put(k, k - 1, -v / w)
        put(k, k, u)
        put(k, k + 1, w)
    if reading in ("printed", "theorem"):
        put(3, 1, A)
    if cp.is_hybrid and reading == "printed":
        put(4, 2, Fraction(1, 2))
    return RingMatrix.from_rows(grid)


def cereceda_determinant(cp: CerecedaParams, n: int, reading: str = "printed") -> Any:
    return generic_determinant(cereceda_matrix(cp, n, reading))


def cereceda_reconstruction_check(params: SeqParams, n_max: int, mode: str = "scalar",
                                  reading: str = "printed") -> IdentityReport:
    from la_verifier.harness.grid import BuiltinCheck, GridSpec, run_check

    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    name = f"cereceda-{mode}/{reading}"
    return run_check(BuiltinCheck(name), GridSpec.single(params, n=range(n_max + 1)))
