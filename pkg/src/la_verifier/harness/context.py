# src/la_verifier/harness/context.py
"""Per-parameter evaluation cache shared by every check at one grid point."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Tuple

from la_verifier.algebra.hybrid import PSI, Hybrid
from la_verifier.algebra.scalars import QuadExt
from la_verifier.errors import DegenerateParameters, IndexOutOfDomain
from la_verifier.schemas import SeqParams
from la_verifier.sequences.hybrid import hybrid_constants, hybrid_homogeneous_part
from la_verifier.sequences.scalar import characteristic_data


class SequenceContext:
    """Lazily extended term lists and Binet pieces for a single SeqParams.

    One context is owned by one worker at a time; nothing here is shared
    across processes.
    """

    def __init__(self, params: SeqParams) -> None:
        self.params = params
        p, q, r, a, b = params.p, params.q, params.r, params.a, params.b
        self._terms: List[Fraction] = [a, b, p * b + q * a + r]
        self._lah: Dict[int, Hybrid] = {}
        self._hpart: Dict[int, Hybrid] = {}
        self._hpart_rational: Dict[int, Hybrid] = {}
        self._pow1: List[QuadExt] = []
        self._pow2: List[QuadExt] = []
        self.memo: Dict[str, Any] = {}

    # --- Scalar terms ---

    def la(self, n: int) -> Fraction:
        if n < 0:
            raise IndexOutOfDomain(f"LA index must be >= 0, got {n}")
        p, q = self.params.p, self.params.q
        c1, c2, c3 = 1 + p, q - p, -q
        terms = self._terms
        while len(terms) <= n:
            terms.append(c1 * terms[-1] + c2 * terms[-2] + c3 * terms[-3])
        return terms[n]

    def lah(self, m: int) -> Hybrid:
        """LaH_m from the definition."""
        if m < 0:
            raise IndexOutOfDomain(f"LAH index must be >= 0, got {m}")
        value = self._lah.get(m)
        if value is None:
            self.la(m + 3)
            value = Hybrid(*self._terms[m:m + 4])
            self._lah[m] = value
        return value

    def lah_binet(self, m: int) -> Hybrid:
        """LaH_m through (r*Psi + HH_m) / rho."""
        rho = self.rho
        if rho == 0:
            raise DegenerateParameters("rho = 0")
        return (self.hpart_rational(m) + self.r_psi) / rho

    # --- Binet pieces ---

    @cached_property
    def chars(self):
        return characteristic_data(self.params)

    @cached_property
    def constants(self):
        return hybrid_constants(self.params)

    @property
    def rho(self) -> Fraction:
        return self.params.rho

    @cached_property
    def r_psi(self) -> Hybrid:
        return PSI.scale(self.params.r)

    @cached_property
    def psi2_psi1(self) -> Hybrid:
        return self.constants.Psi2 * self.constants.Psi1

    @cached_property
    def psi1_psi2(self) -> Hybrid:
        return self.constants.Psi1 * self.constants.Psi2

    @cached_property
    def phi_product(self) -> QuadExt:
        return self.chars.phi1 * self.chars.phi2

    def psi_powers(self, k: int) -> Tuple[QuadExt, QuadExt]:
        """(psi1^k, psi2^k); negative k needs q != 0."""
        if k < 0:
            return self.chars.psi1 ** k, self.chars.psi2 ** k
        if not self._pow1:
            one = QuadExt(1, 0, self.chars.D)
            self._pow1.append(one)
            self._pow2.append(one)
        while len(self._pow1) <= k:
            self._pow1.append(self._pow1[-1] * self.chars.psi1)
            self._pow2.append(self._pow2[-1] * self.chars.psi2)
        return self._pow1[k], self._pow2[k]

    def hpart(self, n: int) -> Hybrid:
        """HH_n in Hybrid[QuadExt]."""
        value = self._hpart.get(n)
        if value is None:
            if n < 0:
                value = hybrid_homogeneous_part(self.params, n)
            else:
                cd = self.chars
                w1, w2 = self.psi_powers(n)
                value = (self.constants.Psi1.scale(cd.phi1 * w1)
                         - self.constants.Psi2.scale(cd.phi2 * w2)) / cd.delta
            self._hpart[n] = value
        return value

    def hpart_rational(self, n: int) -> Hybrid:
        value = self._hpart_rational.get(n)
        if value is None:
            value = self.hpart(n).rational_part()
            self._hpart_rational[n] = value
        return value

    def hs(self, m: int) -> Fraction:
        """Scalar homogeneous part H_m, the real component of HH_m."""
        return self.hpart_rational(m).re

    def kshift(self, n: int, u: int) -> Hybrid:
        return self.hpart_rational(n) - self.hpart_rational(n + u)
