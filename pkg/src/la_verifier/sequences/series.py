# src/la_verifier/sequences/series.py
"""
Truncated power series with hybrid coefficients, used to expand the ordinary
generating function

    g(t) = [LaH_0 + (LaH_1 - (1+p) LaH_0) t + (LaH_2 - (1+p) LaH_1 - (q-p) LaH_0) t^2]
           / (1 - (1+p) t - (q-p) t^2 + q t^3)

and to read off exponential generating function coefficients exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, List, Sequence

from la_verifier.algebra.hybrid import PSI, Hybrid
from la_verifier.errors import DegenerateParameters, ShapeMismatch
from la_verifier.schemas import IdentityReport, SeqParams
from la_verifier.sequences.hybrid import hybrid_constants, lah_by_definition
from la_verifier.sequences.scalar import characteristic_data

EGF_READINGS = ("corrected", "printed")


@dataclass(frozen=True)
class HybridSeries:
    """Coefficients c_0..c_{order-1} of sum c_m t^m; t is central."""

    coefficients: tuple
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("series order must be >= 1")
        coeffs = tuple(self.coefficients[:self.order])
        if len(coeffs) < self.order:
            zero = Hybrid()
            coeffs = coeffs + (zero,) * (self.order - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    def __getitem__(self, m: int) -> Hybrid:
        return self.coefficients[m]

    def __len__(self) -> int:
        return self.order

    def _check_order(self, other: "HybridSeries") -> None:
        if other.order != self.order:
            raise ShapeMismatch(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "HybridSeries") -> "HybridSeries":
        self._check_order(other)
        return HybridSeries(tuple(x + y for x, y in zip(self.coefficients, other.coefficients)), self.order)

    def __sub__(self, other: "HybridSeries") -> "HybridSeries":
        self._check_order(other)
        return HybridSeries(tuple(x - y for x, y in zip(self.coefficients, other.coefficients)), self.order)

    def truncate(self, order: int) -> "HybridSeries":
        return HybridSeries(self.coefficients[:order], order)

    def times_scalar_series(self, scalars: Sequence[Any]) -> "HybridSeries":
        """Cauchy product with a scalar series; hybrid coefficients stay on the left."""
        out: List[Hybrid] = []
        for m in range(self.order):
            acc = Hybrid()
            for k in range(min(m, len(scalars) - 1) + 1):
                if scalars[k] != 0:
                    acc = acc + self.coefficients[m - k] * scalars[k]
            out.append(acc)
        return HybridSeries(tuple(out), self.order)

    def divide_by_scalar_series(self, scalars: Sequence[Any]) -> "HybridSeries":
        """Long division by a scalar series whose constant term is 1."""
        if not scalars or scalars[0] != 1:
            raise ValueError("divisor series must have constant term 1")
        out: List[Hybrid] = []
        for m in range(self.order):
            acc = self.coefficients[m]
            for k in range(1, min(m, len(scalars) - 1) + 1):
                if scalars[k] != 0:
                    acc = acc - out[m - k] * scalars[k]
            out.append(acc)
        return HybridSeries(tuple(out), self.order)

    def to_list(self) -> List[dict]:
        return [c.to_dict() for c in self.coefficients]


def ogf_denominator(params: SeqParams) -> List[Fraction]:
    """[1, -(1+p), -(q-p), q] for 1 - (1+p)t - (q-p)t^2 + q t^3."""
    p, q = params.p, params.q
    return [Fraction(1), -(1 + p), -(q - p), q]


def ogf_numerator(params: SeqParams) -> List[Hybrid]:
    h0, h1, h2 = (lah_by_definition(params, m) for m in range(3))
    p, q = params.p, params.q
    return [
        h0,
        h1 - h0.scale(1 + p),
        h2 - h1.scale(1 + p) - h0.scale(q - p),
    ]


def expand_ogf(params: SeqParams, order: int) -> HybridSeries:
    numerator = HybridSeries(tuple(ogf_numerator(params)), order)
    return numerator.divide_by_scalar_series(ogf_denominator(params))


def egf_coefficients(params: SeqParams, order: int, reading: str = "corrected") -> List[Hybrid]:
    """Taylor coefficients of (1/rho)[r Psi e^t + (Phi1 Psi1 e^{psi1 t} - Phi2 Psi2 e^{x t}) / (psi1 - psi2)].

    The corrected reading takes x = psi2; the printed reading repeats psi1.
    """
    if reading not in EGF_READINGS:
        raise ValueError(f"unknown reading {reading!r}; expected one of {EGF_READINGS}")
    rho = params.rho
    if rho == 0:
        raise DegenerateParameters(f"1 - p - q = 0 for ({params}); the generating function divides by it")
    cd = characteristic_data(params)
    hc = hybrid_constants(params)
    second_root = cd.psi2 if reading == "corrected" else cd.psi1
    a1 = hc.Psi1.scale(cd.phi1 / cd.delta)
    a2 = hc.Psi2.scale(cd.phi2 / cd.delta)
    shift = PSI.scale(params.r)
    out: List[Hybrid] = []
    pow1 = cd.psi1 ** 0
    pow2 = second_root ** 0
    for m in range(order):
        fact = factorial(m)
        term = shift + a1.scale(pow1) - a2.scale(pow2)
        out.append(term / (rho * fact))
        pow1 = pow1 * cd.psi1
        pow2 = pow2 * second_root
    return out


def egf_coefficient(params: SeqParams, m: int, reading: str = "corrected") -> Hybrid:
    """m! times the m-th Taylor coefficient, without building the lower ones."""
    if reading not in EGF_READINGS:
        raise ValueError(f"unknown reading {reading!r}; expected one of {EGF_READINGS}")
    rho = params.rho
    if rho == 0:
        raise DegenerateParameters(f"1 - p - q = 0 for ({params}); the generating function divides by it")
    cd = characteristic_data(params)
    hc = hybrid_constants(params)
    second_root = cd.psi2 if reading == "corrected" else cd.psi1
    term = (PSI.scale(params.r)
            + hc.Psi1.scale(cd.phi1 * cd.psi1 ** m / cd.delta)
            - hc.Psi2.scale(cd.phi2 * second_root ** m / cd.delta))
    return term / rho


def check_egf(params: SeqParams, order: int, reading: str = "corrected") -> IdentityReport:
    from la_verifier.harness.grid import BuiltinCheck, GridSpec, run_check

    name = "egf" if reading == "corrected" else "egf/printed"
    grid = GridSpec.single(params, m=range(order))
    return run_check(BuiltinCheck(name), grid)
