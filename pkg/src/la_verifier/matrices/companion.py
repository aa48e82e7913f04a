# src/la_verifier/matrices/companion.py
"""
The companion matrix

    Q = [[1+p, q-p, -q],
         [1,   0,   0 ],
         [0,   1,   0 ]]

and the matrix power identity M_m = M_0 * Q^m with

    M_m = [[LaH_{m+3}, LaG_{m+4}, -q LaH_{m+2}],
           [LaH_{m+2}, LaG_{m+3}, -q LaH_{m+1}],
           [LaH_{m+1}, LaG_{m+2}, -q LaH_m    ]],   LaG_{k} = LaH_k - (1+p) LaH_{k-1}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from la_verifier.algebra.hybrid import Hybrid
from la_verifier.errors import IndexOutOfDomain
from la_verifier.matrices.ring_matrix import RingMatrix
from la_verifier.schemas import IdentityReport, SeqParams
from la_verifier.sequences.hybrid import lah_by_definition

HybridSource = Callable[[int], Hybrid]


def companion_matrix(params: SeqParams) -> RingMatrix:
    p, q = params.p, params.q
    return RingMatrix.from_rows([
        [1 + p, q - p, -q],
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0)],
    ])


def characteristic_cubic_residual(params: SeqParams) -> RingMatrix:
    """Q^3 - (1+p) Q^2 - (q-p) Q + q I; zero when Q satisfies the characteristic cubic."""
    p, q = params.p, params.q
    Q = companion_matrix(params)
    Q2 = Q * Q
    Q3 = Q2 * Q
    return Q3 - Q2 * (1 + p) - Q * (q - p) + RingMatrix.identity(3) * q


def characteristic_cubic_check(params: SeqParams) -> bool:
    return characteristic_cubic_residual(params) == RingMatrix.zeros(3, 3)


def lag(params: SeqParams, k: int, lah: HybridSource = None) -> Hybrid:
    """LaG_k = LaH_k - (1+p) LaH_{k-1}, for k >= 1."""
    if k < 1:
        raise IndexOutOfDomain(f"LaG index must be >= 1, got {k}")
    lah = lah or (lambda m: lah_by_definition(params, m))
    return lah(k) - lah(k - 1).scale(1 + params.p)


def power_matrix(params: SeqParams, m: int, lah: HybridSource = None) -> RingMatrix:
    if m < 0:
        raise IndexOutOfDomain(f"matrix power index must be >= 0, got {m}")
    lah = lah or (lambda k: lah_by_definition(params, k))
    q = params.q
    return RingMatrix.from_rows([
        [lah(m + 3), lag(params, m + 4, lah), lah(m + 2).scale(-q)],
        [lah(m + 2), lag(params, m + 3, lah), lah(m + 1).scale(-q)],
        [lah(m + 1), lag(params, m + 2, lah), lah(m).scale(-q)],
    ])


def window_column(lah: HybridSource, m: int) -> RingMatrix:
    """(LaH_{m+2}, LaH_{m+1}, LaH_m) as a 3x1 column."""
    return RingMatrix.column([lah(m + 2), lah(m + 1), lah(m)])


def column_vector_check(params: SeqParams, m_max: int) -> IdentityReport:
    from la_verifier.harness.grid import BuiltinCheck, GridSpec, run_check

    return run_check(BuiltinCheck("column-vector"), GridSpec.single(params, m=range(m_max + 1)))


def matrix_power_identity_check(params: SeqParams, m_max: int) -> IdentityReport:
    from la_verifier.harness.grid import BuiltinCheck, GridSpec, run_check

    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    return run_check(BuiltinCheck("matrix-power"), GridSpec.single(params, m=range(m_max + 1)))
