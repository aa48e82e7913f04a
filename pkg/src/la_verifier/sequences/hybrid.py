# src/la_verifier/sequences/hybrid.py
"""
Generalized Leonardo-Alwyn hybrid numbers

    LaH_m = L_m + L_{m+1} i + L_{m+2} eps + L_{m+3} h

with the recurrence LaH_{m+2} = p LaH_{m+1} + q LaH_m + r*Psi, Psi = 1 + i + eps + h,
and the Binet form LaH_m = (r*Psi + HH_m) / rho where

    HH_m = (Phi1 psi1^m Psi1 - Phi2 psi2^m Psi2) / (psi1 - psi2),
    Psij = 1 + psij i + psij^2 eps + psij^3 h.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from loguru import logger

from la_verifier.algebra.hybrid import PSI, Hybrid
from la_verifier.algebra.scalars import QuadExt
from la_verifier.errors import DegenerateParameters, IndexOutOfDomain, SurdPartRemains, ZeroCoefficient
from la_verifier.schemas import SeqParams
from la_verifier.sequences.scalar import characteristic_data, la_terms


@dataclass(frozen=True)
class HybridConstants:
    psi_unit: Hybrid
    Psi1: Hybrid
    Psi2: Hybrid


@dataclass(frozen=True)
class HybridTerm:
    index: int
    value: Hybrid

    def to_dict(self) -> Dict[str, Any]:
        return {"m": self.index, "value": self.value.to_dict()}


@lru_cache(maxsize=256)
def hybrid_constants(params: SeqParams) -> HybridConstants:
    cd = characteristic_data(params)
    psi1, psi2 = cd.psi1, cd.psi2
    one = QuadExt(1, 0, cd.D)
    Psi1 = Hybrid(one, psi1, psi1 ** 2, psi1 ** 3)
    Psi2 = Hybrid(one, psi2, psi2 ** 2, psi2 ** 3)
    return HybridConstants(psi_unit=PSI, Psi1=Psi1, Psi2=Psi2)


def _require_index(m: int) -> None:
    if m < 0:
        raise IndexOutOfDomain(f"hybrid index must be >= 0, got {m}")


def lah_by_definition(params: SeqParams, m: int) -> Hybrid:
    _require_index(m)
    terms = la_terms(params, m + 4)
    return Hybrid(*terms[m:m + 4])


def lah_terms(params: SeqParams, count: int) -> List[Hybrid]:
    """Hybrid terms 0..count-1 packed from one scalar term list."""
    terms = la_terms(params, count + 3)
    return [Hybrid(*terms[m:m + 4]) for m in range(count)]


def lah_by_recurrence(
    params: SeqParams,
    count: int,
    seeds: Optional[Tuple[Hybrid, Hybrid]] = None,
) -> List[Hybrid]:
    """Iterate LaH_{m+2} = p LaH_{m+1} + q LaH_m + r*Psi.

    Seeds default to the definition values at m = 0, 1; pass printed_seeds(params)
    to iterate from the closed-form seed polynomials instead.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    if seeds is None:
        seeds = (lah_by_definition(params, 0), lah_by_definition(params, 1))
    out = list(seeds[:count])
    shift = PSI.scale(params.r)
    while len(out) < count:
        out.append(out[-1].scale(params.p) + out[-2].scale(params.q) + shift)
    return out


def printed_seeds(params: SeqParams) -> Tuple[Hybrid, Hybrid]:
    """LaH_0 and LaH_1 as the closed-form seed polynomials are written out."""
    p, q, r, a, b = params.p, params.q, params.r, params.a, params.b
    la2 = p * b + q * a + r
    la3 = (p * p + q) * b + (p * q + q) * a + (p + 1) * r
    la4 = (p * p + 2 * p * q) * b + (p * p * q + p * q + q * q) * a + (p * p + p + q + 1) * r
    return Hybrid(a, b, la2, la3), Hybrid(b, la2, la3, la4)


def printed_seed_h_cubic(params: SeqParams):
    """h-component of LaH_1 with the b-coefficient read as p^3 + 2pq."""
    p, q, r, a, b = params.p, params.q, params.r, params.a, params.b
    return (p ** 3 + 2 * p * q) * b + (p * p * q + p * q + q * q) * a + (p * p + p + q + 1) * r


def hybrid_homogeneous_part(params: SeqParams, n: int) -> Hybrid:
    """HH_n in Hybrid[QuadExt]; negative n runs the recurrence backward (q != 0)."""
    if n < 0:
        return _homogeneous_backward(params, n)
    cd = characteristic_data(params)
    hc = hybrid_constants(params)
    c1 = cd.phi1 * cd.psi1 ** n / cd.delta
    c2 = cd.phi2 * cd.psi2 ** n / cd.delta
    return hc.Psi1.scale(c1) - hc.Psi2.scale(c2)


def _homogeneous_backward(params: SeqParams, n: int) -> Hybrid:
    if params.q == 0:
        raise ZeroCoefficient("negative-index homogeneous parts need q != 0")
    upper = hybrid_homogeneous_part(params, 1)
    lower = hybrid_homogeneous_part(params, 0)
    k = 0
    while k > n:
        # HH_{k-1} = (HH_{k+1} - p HH_k) / q
        upper, lower = lower, (upper - lower.scale(params.p)) / params.q
        k -= 1
    return lower


def k_shift(params: SeqParams, n: int, u: int) -> Hybrid:
    """K_n(u) = HH_n - HH_{n+u}."""
    return hybrid_homogeneous_part(params, n) - hybrid_homogeneous_part(params, n + u)


def lah_binet_exact(params: SeqParams, m: int) -> Hybrid:
    _require_index(m)
    rho = params.rho
    if rho == 0:
        raise DegenerateParameters(f"1 - p - q = 0 for ({params}); the hybrid Binet form divides by it")
    return (hybrid_homogeneous_part(params, m) + PSI.scale(params.r)) / rho


def lah_binet(params: SeqParams, m: int) -> Hybrid:
    exact = lah_binet_exact(params, m)
    try:
        return exact.rational_part()
    except SurdPartRemains:
        logger.error(f"hybrid Binet value at m={m} kept a surd part for ({params})")
        raise


def leonardo_remark_binet(m: int) -> Hybrid:
    """2 (psi1^{m+1} Psi1 - psi2^{m+1} Psi2) / (psi1 - psi2) - Psi for the Leonardo numbers."""
    _require_index(m)
    params = SeqParams.leonardo()
    cd = characteristic_data(params)
    hc = hybrid_constants(params)
    core = hc.Psi1.scale(cd.psi1 ** (m + 1)) - hc.Psi2.scale(cd.psi2 ** (m + 1))
    return (core.scale(2) / cd.delta - PSI).rational_part()


def hybrid_table(values: Sequence[Hybrid], index_name: str = "n", start: int = 0) -> pd.DataFrame:
    """One row per hybrid value: index, re, i, eps, h as exact strings."""
    rows = [[start + k] + [str(c) for c in value.components()] for k, value in enumerate(values)]
    return pd.DataFrame(rows, columns=[index_name, "re", "i", "eps", "h"])


def lah_table(params: SeqParams, count: int) -> pd.DataFrame:
    return hybrid_table(lah_terms(params, count))
