# src/la_verifier/sequences/scalar.py
"""
The scalar generalized Leonardo-Alwyn sequence.

    L_{n+3} = (1+p) L_{n+2} + (q-p) L_{n+1} - q L_n,   L_0 = a, L_1 = b, L_2 = pb + qa + r

which is the same sequence as L_{n+2} = p L_{n+1} + q L_n + r. Closed forms
live in Q[t]/(t^2 - D) with D = p^2 + 4q, psi_{1,2} = (p +- t)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import pandas as pd
from loguru import logger

from la_verifier.algebra.scalars import QuadExt
from la_verifier.errors import DegenerateParameters, IndexOutOfDomain
from la_verifier.schemas import SeqParams
from la_verifier.utils import rational_to_str


@dataclass(frozen=True)
class CharacteristicData:
    D: Fraction
    psi1: QuadExt
    psi2: QuadExt
    delta: QuadExt
    rho: Fraction
    phi1: QuadExt
    phi2: QuadExt


@lru_cache(maxsize=256)
def characteristic_data(params: SeqParams) -> CharacteristicData:
    p, q, r, a, b = params.p, params.q, params.r, params.a, params.b
    D = params.D
    rho = params.rho
    psi1 = QuadExt(p / 2, Fraction(1, 2), D)
    psi2 = psi1.conjugate()
    lead = rho * a - r
    rest = rho * b + (p * p + p * q - p) * a + (p - 1) * r
    return CharacteristicData(
        D=D,
        psi1=psi1,
        psi2=psi2,
        delta=psi1 - psi2,
        rho=rho,
        phi1=psi1 * lead + rest,
        phi2=psi2 * lead + rest,
    )


def _require_index(n: int) -> None:
    if n < 0:
        raise IndexOutOfDomain(f"sequence index must be >= 0, got {n}")


def _require_rho(params: SeqParams) -> Fraction:
    if params.rho == 0:
        raise DegenerateParameters(f"1 - p - q = 0 for ({params}); closed forms divide by it")
    return params.rho


@lru_cache(maxsize=512)
def _terms(params: SeqParams, count: int) -> Tuple[Fraction, ...]:
    p, q, r, a, b = params.p, params.q, params.r, params.a, params.b
    seeds = (a, b, p * b + q * a + r)
    if count <= 3:
        return seeds[:count]
    c1, c2, c3 = 1 + p, q - p, -q
    out = list(seeds)
    for _ in range(count - 3):
        out.append(c1 * out[-1] + c2 * out[-2] + c3 * out[-3])
    return tuple(out)


def la_terms(params: SeqParams, count: int) -> List[Fraction]:
    """First `count` terms from the third-order recurrence."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return list(_terms(params, count))


def la_terms_inhomogeneous(params: SeqParams, count: int) -> List[Fraction]:
    """First `count` terms from L_{n+2} = p L_{n+1} + q L_n + r."""
    if count < 0:
        raise ValueError("count must be >= 0")
    out = [params.a, params.b][:count]
    while len(out) < count:
        out.append(params.p * out[-1] + params.q * out[-2] + params.r)
    return out


def la_term(params: SeqParams, n: int) -> Fraction:
    _require_index(n)
    return _terms(params, n + 1)[n]


def homogeneous_part_exact(params: SeqParams, m: int) -> QuadExt:
    """(Phi1 psi1^m - Phi2 psi2^m) / (psi1 - psi2) in Q[t]/(t^2 - D)."""
    _require_index(m)
    cd = characteristic_data(params)
    return (cd.phi1 * cd.psi1 ** m - cd.phi2 * cd.psi2 ** m) / cd.delta


def homogeneous_part(params: SeqParams, m: int) -> Fraction:
    value = homogeneous_part_exact(params, m)
    return value.to_rational()


def la_binet(params: SeqParams, n: int) -> Fraction:
    rho = _require_rho(params)
    exact = (homogeneous_part_exact(params, n) + params.r) / rho
    if not exact.is_rational():
        # Antisymmetry under t -> -t forces a rational result.
        logger.error(f"Binet value at n={n} kept surd part {exact.y} for ({params})")
    return exact.to_rational()


# --- Special-case Oracles ---

def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = F_2 = 1."""
    _require_index(n)
    x, y = 0, 1
    for _ in range(n):
        x, y = y, x + y
    return x


def jacobsthal(n: int) -> int:
    """J_0 = 0, J_1 = 1, J_{n+2} = J_{n+1} + 2 J_n."""
    _require_index(n)
    x, y = 0, 1
    for _ in range(n):
        x, y = y, y + 2 * x
    return x


def special_case_oracle(kind: str, n: int) -> Fraction:
    """Leonardo numbers as 2F_{n+1} - 1, Ernst numbers as (3J_{n+1} - 1)/2."""
    if kind == "leonardo":
        return Fraction(2 * fibonacci(n + 1) - 1)
    if kind == "ernst":
        return Fraction(3 * jacobsthal(n + 1) - 1, 2)
    raise ValueError(f"unknown special case {kind!r}; expected 'leonardo' or 'ernst'")


def terms_table(params: SeqParams, count: int) -> pd.DataFrame:
    terms = la_terms(params, count)
    return pd.DataFrame({"n": list(range(count)), "value": [rational_to_str(t) for t in terms]})
