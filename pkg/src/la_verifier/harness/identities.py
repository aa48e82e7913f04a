# src/la_verifier/harness/identities.py
"""
Built-in identity checks.

Every check is a pair of evaluators over a SequenceContext: `evaluate`
returns (lhs, rhs) or None when the index point lies outside the
identity's domain. Product identities whose left side is taken through the
Binet path also carry a `confirm` evaluator that recomputes the left side
from definition-based products.
"""

from __future__ import annotations

from typing import Any, Callable, Dict, List, Optional, Tuple

from la_verifier.algebra.hybrid import EPS, H, I, PSI, Hybrid, character
from la_verifier.algebra.scalars import QuadExt
from la_verifier.config import (
    DEFAULT_CERECEDA_N_MAX,
    DEFAULT_COLUMN_M_MAX,
    DEFAULT_M_MAX,
    DEFAULT_N_MAX,
    DEFAULT_RECURRENCE_N_MAX,
    DEFAULT_SERIES_ORDER,
    DEFAULT_SHIFT_MAX,
    DEFAULT_SUMMATION_N_MAX,
    DEFAULT_VAJDA_N_MAX,
    LEONARDO_PARAMS,
)
from la_verifier.harness.context import SequenceContext
from la_verifier.harness.grid import BuiltinCheck, CheckDefinition, GridSpec, register, run_check
from la_verifier.harness.reports import MUST_PASS, UNDER_TEST
from la_verifier.matrices.cereceda import cereceda_determinant, leonardo_alwyn_cereceda_params
from la_verifier.matrices.companion import (
    characteristic_cubic_residual,
    companion_matrix,
    power_matrix,
    window_column,
)
from la_verifier.matrices.ring_matrix import RingMatrix
from la_verifier.schemas import IdentityReport, SeqParams
from la_verifier.sequences.hybrid import lah_binet, lah_by_recurrence, printed_seed_h_cubic, printed_seeds
from la_verifier.sequences.scalar import la_binet, la_terms_inhomogeneous
from la_verifier.sequences.series import egf_coefficient, expand_ogf

Indices = Dict[str, int]
LahSource = Callable[[int], Hybrid]


def settle(value: Any) -> Any:
    """Collapse QuadExt components with zero surd part to rationals; keep the rest."""
    if isinstance(value, Hybrid):
        comps = value.components()
        if all(not isinstance(c, QuadExt) or c.is_rational() for c in comps):
            return value.rational_part()
        return value
    if isinstance(value, QuadExt) and value.is_rational():
        return value.x
    return value


def _axis(limit: int) -> Tuple[int, ...]:
    return tuple(range(limit + 1))


# --- Scalar sequence ---

def _recurrence_equiv(ctx: SequenceContext, idx: Indices):
    n = idx["n"]
    return ctx.la(n), la_terms_inhomogeneous(ctx.params, n + 1)[n]


def _binet(ctx: SequenceContext, idx: Indices):
    n = idx["n"]
    return la_binet(ctx.params, n), ctx.la(n)


# --- Hybrid sequence ---

def _hybrid_binet(ctx: SequenceContext, idx: Indices):
    n = idx["n"]
    definition = ctx.lah(n)
    recurrence = ctx.memo.get("lah_recurrence")
    if recurrence is None or len(recurrence) <= n:
        recurrence = lah_by_recurrence(ctx.params, max(n + 1, 2 * len(recurrence or []), 8))
        ctx.memo["lah_recurrence"] = recurrence
    if recurrence[n] != definition:
        return recurrence[n], definition
    return lah_binet(ctx.params, n), definition


def _seed_component(ctx: SequenceContext, idx: Indices):
    c = idx["component"]
    seeds = ctx.memo.get("printed_seeds")
    if seeds is None:
        seeds = ctx.memo["printed_seeds"] = printed_seeds(ctx.params)
    printed = seeds[c // 4].components()[c % 4]
    return printed, ctx.lah(c // 4).components()[c % 4]


def _seed_cubic(ctx: SequenceContext, idx: Indices):
    return printed_seed_h_cubic(ctx.params), ctx.la(4)


def _character(ctx: SequenceContext, idx: Indices):
    m = idx["m"]
    p, q, r = ctx.params.p, ctx.params.q, ctx.params.r
    h0, h1 = ctx.hs(m), ctx.hs(m + 1)
    bracket = (
        2 * r * (1 - q - p * q) * h0
        - 2 * r * (p * p + p + q) * h1
        + (1 - p * p * q * q) * h0 * h0
        + (1 - 2 * p - (p * p + q) ** 2) * h1 * h1
        - 2 * q * (1 + p * q + p ** 3) * h1 * h0
        - r * r
    )
    return character(ctx.lah(m)), bracket / (ctx.rho * ctx.rho)


def _partial_sum(ctx: SequenceContext, m: int) -> Hybrid:
    sums: List[Hybrid] = ctx.memo.setdefault("partial_sums", [])
    while len(sums) <= m:
        prev = sums[-1] if sums else Hybrid()
        sums.append(prev + ctx.lah(len(sums)))
    return sums[m]


def _summation(ctx: SequenceContext, idx: Indices):
    m = idx["m"]
    p, q, r = ctx.params.p, ctx.params.q, ctx.params.r
    rhs = (PSI.scale(r * (m + 2 * p + q) / ctx.rho)
           + ctx.lah(0).scale(1 - p) + ctx.lah(1) - ctx.lah(m + 1) - ctx.lah(m).scale(p + q))
    return _partial_sum(ctx, m), rhs


def _summation_corrected(ctx: SequenceContext, idx: Indices):
    m = idx["m"]
    p, q, r = ctx.params.p, ctx.params.q, ctx.params.r
    rhs = (ctx.lah(0).scale(1 - p) + ctx.lah(1) - ctx.lah(m + 1) - ctx.lah(m).scale(q)
           + PSI.scale(m * r)) / ctx.rho
    return _partial_sum(ctx, m), rhs


_LEONARDO_TAIL = I.scale(2) + EPS.scale(4) + H.scale(8)


def _summation_leonardo(ctx: SequenceContext, idx: Indices):
    n = idx["n"]
    rhs = ctx.lah(n + 2) - PSI.scale(n + 2) - _LEONARDO_TAIL
    return _partial_sum(ctx, n), rhs


# --- Vajda family ---

def _product_difference(lah: LahSource, n: int, u: int, v: int) -> Hybrid:
    """LaH_{n+u} LaH_{n+v} - LaH_n LaH_{n+u+v}, order as written."""
    return lah(n + u) * lah(n + v) - lah(n) * lah(n + u + v)


def _hpart_difference(ctx: SequenceContext, n: int, u: int, v: int) -> Hybrid:
    hp = ctx.hpart_rational
    return hp(n + u) * hp(n + v) - hp(n) * hp(n + u + v)


def _vajda_core(ctx: SequenceContext, exponent: int, u: int, left_power: int, right_power: int) -> Hybrid:
    """Phi1 Phi2 (-q)^exponent (psi1^u - psi2^u) [psi1^a Psi2 Psi1 - psi2^b Psi1 Psi2] / Delta^2.

    `left_power` and `right_power` select psi1^a and psi2^b (a negative power reads psi^{-k}).
    """
    cd = ctx.chars
    w1u, w2u = ctx.psi_powers(u)
    left = ctx.psi_powers(left_power)[0] if left_power >= 0 else cd.psi1 ** left_power
    right = ctx.psi_powers(right_power)[1] if right_power >= 0 else cd.psi2 ** right_power
    coeff = ctx.phi_product * (-ctx.params.q) ** exponent * (w1u - w2u) / (cd.delta * cd.delta)
    bracket = ctx.psi2_psi1.scale(left) - ctx.psi1_psi2.scale(right)
    return bracket.scale(coeff)


def _catalan_core(ctx: SequenceContext, n: int, u: int) -> Hybrid:
    """(-q)^{n-u} (psi1^u - psi2^u) [psi2^u Psi2 Psi1 - psi1^u Psi1 Psi2] form."""
    cd = ctx.chars
    w1u, w2u = ctx.psi_powers(u)
    coeff = ctx.phi_product * (-ctx.params.q) ** (n - u) * (w1u - w2u) / (cd.delta * cd.delta)
    return (ctx.psi2_psi1.scale(w2u) - ctx.psi1_psi2.scale(w1u)).scale(coeff)


def _cassini_core(ctx: SequenceContext, n: int) -> Hybrid:
    cd = ctx.chars
    coeff = ctx.phi_product * (-ctx.params.q) ** (n - 1) * cd.delta / (cd.delta * cd.delta)
    return (ctx.psi2_psi1.scale(cd.psi2) - ctx.psi1_psi2.scale(cd.psi1)).scale(coeff)


def _r_term(ctx: SequenceContext, left: Hybrid, right: Hybrid) -> Hybrid:
    """r [Psi * left - right * Psi]."""
    return (PSI * left - right * PSI).scale(ctx.params.r)


def _vajda_t1(ctx: SequenceContext, idx: Indices):
    n, u, v = idx["n"], idx["u"], idx["v"]
    return _hpart_difference(ctx, n, u, v), settle(_vajda_core(ctx, n, u, v, v))


def _t2_printed_rhs(ctx: SequenceContext, n: int, u: int, v: int) -> Hybrid:
    core = _vajda_core(ctx, n, u, v, v)
    extra = _r_term(ctx, ctx.kshift(n, u), ctx.kshift(n + v, u))
    return (core + extra) / (ctx.rho * ctx.rho)


def _vajda_t2(ctx: SequenceContext, idx: Indices):
    n, u, v = idx["n"], idx["u"], idx["v"]
    return _product_difference(ctx.lah_binet, n, u, v), settle(_t2_printed_rhs(ctx, n, u, v))


def _vajda_t2_as_stated(ctx: SequenceContext, idx: Indices):
    n, u, v = idx["n"], idx["u"], idx["v"]
    # Delta^2 = D cancels the 1/Delta^2 inside the core
    core = _vajda_core(ctx, n, u, v, v).scale(ctx.chars.D)
    extra = _r_term(ctx, ctx.kshift(n, u), ctx.kshift(n + v, u))
    rhs = (core + extra) / (ctx.rho * ctx.rho)
    return _product_difference(ctx.lah_binet, n, u, v), settle(rhs)


def _vajda_t2_corrected(ctx: SequenceContext, idx: Indices):
    n, u, v = idx["n"], idx["u"], idx["v"]
    core = _vajda_core(ctx, n, u, v, v)
    extra = _r_term(ctx, ctx.kshift(n + v, u), ctx.kshift(n, u))
    rhs = (core + extra) / (ctx.rho * ctx.rho)
    return _product_difference(ctx.lah_binet, n, u, v), settle(rhs)


def _vajda_confirm(ctx: SequenceContext, idx: Indices):
    return _product_difference(ctx.lah, idx["n"], idx["u"], idx["v"])


def _catalan_rhs(ctx: SequenceContext, n: int, u: int) -> Hybrid:
    extra = _r_term(ctx, ctx.kshift(n, u), ctx.kshift(n - u, u))
    return (_catalan_core(ctx, n, u) + extra) / (ctx.rho * ctx.rho)


def _catalan(ctx: SequenceContext, idx: Indices):
    n, u = idx["n"], idx["u"]
    if n < u:
        return None
    return _product_difference(ctx.lah_binet, n, u, -u), settle(_catalan_rhs(ctx, n, u))


def _catalan_confirm(ctx: SequenceContext, idx: Indices):
    return _product_difference(ctx.lah, idx["n"], idx["u"], -idx["u"])


def _cassini_rhs(ctx: SequenceContext, n: int) -> Hybrid:
    extra = _r_term(ctx, ctx.kshift(n, 1), ctx.kshift(n - 1, 1))
    return (_cassini_core(ctx, n) + extra) / (ctx.rho * ctx.rho)


def _cassini(ctx: SequenceContext, idx: Indices):
    n = idx["n"]
    if n < 1:
        return None
    return _product_difference(ctx.lah_binet, n, 1, -1), settle(_cassini_rhs(ctx, n))


def _cassini_confirm(ctx: SequenceContext, idx: Indices):
    return _product_difference(ctx.lah, idx["n"], 1, -1)


def _docagne_rhs(ctx: SequenceContext, n: int, m: int) -> Hybrid:
    core = _vajda_core(ctx, n, 1, m - n, m - n)
    extra = _r_term(ctx, ctx.kshift(n, 1), ctx.kshift(m, 1))
    return (core + extra) / (ctx.rho * ctx.rho)


def _docagne(ctx: SequenceContext, idx: Indices):
    n, m = idx["n"], idx["m"]
    if m < n:
        return None
    return _product_difference(ctx.lah_binet, n, 1, m - n), settle(_docagne_rhs(ctx, n, m))


def _docagne_confirm(ctx: SequenceContext, idx: Indices):
    n, m = idx["n"], idx["m"]
    return _product_difference(ctx.lah, n, 1, m - n)


def _catalan_via_vajda(ctx: SequenceContext, idx: Indices):
    n, u = idx["n"], idx["u"]
    if n < u or ctx.params.q == 0:
        return None
    return settle(_catalan_rhs(ctx, n, u)), settle(_t2_printed_rhs(ctx, n, u, -u))


def _cassini_via_vajda(ctx: SequenceContext, idx: Indices):
    n = idx["n"]
    if n < 1 or ctx.params.q == 0:
        return None
    return settle(_cassini_rhs(ctx, n)), settle(_t2_printed_rhs(ctx, n, 1, -1))


def _docagne_via_vajda(ctx: SequenceContext, idx: Indices):
    n, m = idx["n"], idx["m"]
    if m < n:
        return None
    return settle(_docagne_rhs(ctx, n, m)), settle(_t2_printed_rhs(ctx, n, 1, m - n))


# Corrected readings: r[Psi K_{n+v}(u) - K_n(u) Psi] at the corollary substitutions.

def _catalan_corrected(ctx: SequenceContext, idx: Indices):
    n, u = idx["n"], idx["u"]
    if n < u:
        return None
    extra = _r_term(ctx, ctx.kshift(n - u, u), ctx.kshift(n, u))
    rhs = (_catalan_core(ctx, n, u) + extra) / (ctx.rho * ctx.rho)
    return _product_difference(ctx.lah_binet, n, u, -u), settle(rhs)


def _cassini_corrected(ctx: SequenceContext, idx: Indices):
    n = idx["n"]
    if n < 1:
        return None
    extra = _r_term(ctx, ctx.kshift(n - 1, 1), ctx.kshift(n, 1))
    rhs = (_cassini_core(ctx, n) + extra) / (ctx.rho * ctx.rho)
    return _product_difference(ctx.lah_binet, n, 1, -1), settle(rhs)


def _docagne_corrected(ctx: SequenceContext, idx: Indices):
    n, m = idx["n"], idx["m"]
    if m < n:
        return None
    extra = _r_term(ctx, ctx.kshift(m, 1), ctx.kshift(n, 1))
    rhs = (_vajda_core(ctx, n, 1, m - n, m - n) + extra) / (ctx.rho * ctx.rho)
    return _product_difference(ctx.lah_binet, n, 1, m - n), settle(rhs)


# --- Generating functions ---

def _ogf(ctx: SequenceContext, idx: Indices):
    m = idx["m"]
    series = ctx.memo.get("ogf")
    if series is None or series.order <= m:
        order = max(m + 1, DEFAULT_SERIES_ORDER, 2 * (series.order if series else 0))
        series = ctx.memo["ogf"] = expand_ogf(ctx.params, order)
    return series[m], ctx.lah(m)


def _egf(reading: str):
    def evaluate(ctx: SequenceContext, idx: Indices):
        m = idx["m"]
        return settle(egf_coefficient(ctx.params, m, reading)), ctx.lah(m)
    return evaluate


# --- Matrices ---

def _companion(ctx: SequenceContext) -> RingMatrix:
    Q = ctx.memo.get("companion")
    if Q is None:
        Q = ctx.memo["companion"] = companion_matrix(ctx.params)
    return Q


def _companion_power(ctx: SequenceContext, m: int) -> RingMatrix:
    powers: List[RingMatrix] = ctx.memo.setdefault("companion_powers", [RingMatrix.identity(3)])
    while len(powers) <= m:
        powers.append(powers[-1] * _companion(ctx))
    return powers[m]


def _column_vector(ctx: SequenceContext, idx: Indices):
    m = idx["m"]
    return _companion(ctx) * window_column(ctx.lah, m), window_column(ctx.lah, m + 1)


def _matrix_power(ctx: SequenceContext, idx: Indices):
    m = idx["m"]
    base = ctx.memo.get("power_base")
    if base is None:
        base = ctx.memo["power_base"] = power_matrix(ctx.params, 0, ctx.lah)
    return power_matrix(ctx.params, m, ctx.lah), base * _companion_power(ctx, m)


def _matrix_power_re(ctx: SequenceContext, idx: Indices):
    m = idx["m"]
    lhs = power_matrix(ctx.params, m, ctx.lah).map(lambda h: h.re)
    base = power_matrix(ctx.params, 0, ctx.lah).map(lambda h: h.re)
    return lhs, base * _companion_power(ctx, m)


def _companion_cubic(ctx: SequenceContext, idx: Indices):
    return characteristic_cubic_residual(ctx.params), RingMatrix.zeros(3, 3)


def _cereceda(mode: str, reading: str):
    key = f"cereceda-{mode}"

    def evaluate(ctx: SequenceContext, idx: Indices):
        n = idx["n"]
        if ctx.params.q == 0:
            return None
        cp = ctx.memo.get(key)
        if cp is None:
            if mode == "scalar" and ctx.params.a == 0:
                return None
            if mode == "hybrid" and character(ctx.lah(0)) == 0:
                return None
            cp = ctx.memo[key] = leonardo_alwyn_cereceda_params(ctx.params, mode)
        expected = ctx.la(n) if mode == "scalar" else ctx.lah(n)
        return cereceda_determinant(cp, n, reading), expected
    return evaluate


# --- Registration ---

_VAJDA_AXES = {"n": _axis(DEFAULT_VAJDA_N_MAX), "u": _axis(DEFAULT_SHIFT_MAX), "v": _axis(DEFAULT_SHIFT_MAX)}
_R_TERM_NOTE = "r-term evaluated as printed: r[Psi K_n(u) - K_{n+v}(u) Psi]"
_DELTA_NOTE = "the Phi1 Phi2 term carries the 1/Delta^2 factor of the first identity"

register(CheckDefinition(
    "recurrence-equiv", "recurrence-equiv", MUST_PASS, _recurrence_equiv, ("n",),
    default_axes={"n": _axis(DEFAULT_RECURRENCE_N_MAX)},
    description="third-order recurrence vs L_{n+2} = p L_{n+1} + q L_n + r",
))
register(CheckDefinition(
    "binet", "binet", MUST_PASS, _binet, ("n",),
    default_axes={"n": _axis(DEFAULT_N_MAX)}, needs_rho=True,
    description="scalar Binet form vs recurrence",
))
register(CheckDefinition(
    "hybrid-binet", "hybrid-binet", MUST_PASS, _hybrid_binet, ("n",),
    default_axes={"n": _axis(DEFAULT_N_MAX)}, needs_rho=True,
    description="hybrid Binet form, hybrid recurrence and definition agree",
))
register(CheckDefinition(
    "seed-polynomials", "seed-polynomials", UNDER_TEST, _seed_component, ("component",),
    fixed_axes={"component": tuple(range(8))},
    description="closed-form seed polynomials of LaH_0, LaH_1 vs definition",
    notes=("component k = 4*seed + unit, units ordered 1, i, eps, h",),
))
register(CheckDefinition(
    "seed-polynomials/cubic-b", "seed-polynomials", UNDER_TEST, _seed_cubic, (),
    description="h-component of LaH_1 with b-coefficient p^3 + 2pq",
    notes=("only the b-coefficient is replaced; the a-coefficient stays p^2 q + pq + q^2",),
))
register(CheckDefinition(
    "character", "character", UNDER_TEST, _character, ("m",),
    default_axes={"m": _axis(DEFAULT_N_MAX)}, needs_rho=True,
    description="character of LaH_m vs closed form in H_m, H_{m+1}",
))
register(CheckDefinition(
    "summation", "summation", UNDER_TEST, _summation, ("m",),
    default_axes={"m": _axis(DEFAULT_N_MAX)}, needs_rho=True,
    description="sum of LaH_0..LaH_m vs r Psi (m+2p+q)/rho + (1-p)LaH_0 + LaH_1 - LaH_{m+1} - (p+q)LaH_m",
))
register(CheckDefinition(
    "summation/corrected", "summation", MUST_PASS, _summation_corrected, ("m",),
    default_axes={"m": _axis(DEFAULT_N_MAX)}, needs_rho=True,
    description="rho * sum = (1-p)LaH_0 + LaH_1 - LaH_{m+1} - q LaH_m + m r Psi",
))
register(CheckDefinition(
    "summation-leonardo", "summation", MUST_PASS, _summation_leonardo, ("n",),
    default_axes={"n": _axis(DEFAULT_SUMMATION_N_MAX)},
    fixed_params=SeqParams(*LEONARDO_PARAMS),
    description="sum of HLe_0..HLe_n = HLe_{n+2} - (n+2)Psi - (2i + 4eps + 8h)",
))
register(CheckDefinition(
    "vajda-t1", "vajda", MUST_PASS, _vajda_t1, ("n", "u", "v"),
    default_axes=_VAJDA_AXES,
    description="HH_{n+u} HH_{n+v} - HH_n HH_{n+u+v} closed form",
))
register(CheckDefinition(
    "vajda-t2", "vajda", MUST_PASS, _vajda_t2, ("n", "u", "v"),
    default_axes=_VAJDA_AXES, needs_rho=True, confirm=_vajda_confirm,
    description="LaH_{n+u} LaH_{n+v} - LaH_n LaH_{n+u+v} closed form",
    notes=(_R_TERM_NOTE, _DELTA_NOTE),
))
register(CheckDefinition(
    "vajda-t2/corrected", "vajda", MUST_PASS, _vajda_t2_corrected, ("n", "u", "v"),
    default_axes=_VAJDA_AXES, needs_rho=True, confirm=_vajda_confirm,
    description="as vajda-t2 with r-term r[Psi K_{n+v}(u) - K_n(u) Psi]",
))
register(CheckDefinition(
    "vajda-t2/as-stated", "vajda", UNDER_TEST, _vajda_t2_as_stated, ("n", "u", "v"),
    default_axes=_VAJDA_AXES, needs_rho=True,
    description="as vajda-t2 without the 1/Delta^2 factor on the Phi1 Phi2 term",
    notes=(_R_TERM_NOTE,),
))
register(CheckDefinition(
    "catalan", "catalan", MUST_PASS, _catalan, ("n", "u"),
    default_axes={"n": _axis(DEFAULT_VAJDA_N_MAX), "u": _axis(DEFAULT_SHIFT_MAX)},
    needs_rho=True, confirm=_catalan_confirm,
    description="LaH_{n+u} LaH_{n-u} - LaH_n^2, n >= u",
    notes=("the corollary's shift variable is read as u",),
))
register(CheckDefinition(
    "catalan/via-vajda", "catalan", MUST_PASS, _catalan_via_vajda, ("n", "u"),
    default_axes={"n": _axis(DEFAULT_VAJDA_N_MAX), "u": _axis(DEFAULT_SHIFT_MAX)}, needs_rho=True,
    description="Catalan right side vs vajda-t2 right side at v = -u",
    notes=("points with q = 0 are skipped: psi^{-u} needs q != 0",),
))
register(CheckDefinition(
    "cassini", "cassini", MUST_PASS, _cassini, ("n",),
    default_axes={"n": _axis(DEFAULT_VAJDA_N_MAX)}, needs_rho=True, confirm=_cassini_confirm,
    description="LaH_{n+1} LaH_{n-1} - LaH_n^2, n >= 1",
))
register(CheckDefinition(
    "cassini/via-vajda", "cassini", MUST_PASS, _cassini_via_vajda, ("n",),
    default_axes={"n": _axis(DEFAULT_VAJDA_N_MAX)}, needs_rho=True,
    description="Cassini right side vs vajda-t2 right side at u = 1, v = -1",
    notes=("points with q = 0 are skipped: psi^{-1} needs q != 0",),
))
register(CheckDefinition(
    "docagne", "docagne", MUST_PASS, _docagne, ("n", "m"),
    default_axes={"n": _axis(DEFAULT_VAJDA_N_MAX), "m": _axis(DEFAULT_VAJDA_N_MAX)},
    needs_rho=True, confirm=_docagne_confirm,
    description="LaH_{n+1} LaH_m - LaH_n LaH_{m+1}, m >= n",
))
register(CheckDefinition(
    "docagne/via-vajda", "docagne", MUST_PASS, _docagne_via_vajda, ("n", "m"),
    default_axes={"n": _axis(DEFAULT_VAJDA_N_MAX), "m": _axis(DEFAULT_VAJDA_N_MAX)}, needs_rho=True,
    description="d'Ocagne right side vs vajda-t2 right side at u = 1, v = m - n",
))
for _name, _fn, _confirm, _vars in (
    ("catalan", _catalan_corrected, _catalan_confirm, ("n", "u")),
    ("cassini", _cassini_corrected, _cassini_confirm, ("n",)),
    ("docagne", _docagne_corrected, _docagne_confirm, ("n", "m")),
):
    register(CheckDefinition(
        f"{_name}/corrected", _name, MUST_PASS, _fn, _vars,
        default_axes={k: _VAJDA_AXES[k] if k != "m" else _axis(DEFAULT_VAJDA_N_MAX) for k in _vars},
        needs_rho=True, confirm=_confirm,
        description=f"{_name} with the r-term of vajda-t2/corrected",
    ))
register(CheckDefinition(
    "ogf", "ogf", MUST_PASS, _ogf, ("m",),
    default_axes={"m": _axis(DEFAULT_SERIES_ORDER - 1)},
    description="ordinary generating function coefficients vs LaH_m",
    notes=("numerator read as a three-term sum",),
))
register(CheckDefinition(
    "egf", "egf", MUST_PASS, _egf("corrected"), ("m",),
    default_axes={"m": _axis(DEFAULT_SERIES_ORDER - 1)}, needs_rho=True,
    description="m! times the exponential generating function coefficient vs LaH_m",
    notes=("second exponential read as e^{psi2 t}",),
))
register(CheckDefinition(
    "egf/printed", "egf", UNDER_TEST, _egf("printed"), ("m",),
    default_axes={"m": _axis(DEFAULT_SERIES_ORDER - 1)}, needs_rho=True,
    description="as egf with e^{psi1 t} in both exponentials",
))
register(CheckDefinition(
    "column-vector", "column-vector", MUST_PASS, _column_vector, ("m",),
    default_axes={"m": _axis(DEFAULT_COLUMN_M_MAX)},
    description="Q (LaH_{m+2}, LaH_{m+1}, LaH_m) = (LaH_{m+3}, LaH_{m+2}, LaH_{m+1})",
))
register(CheckDefinition(
    "matrix-power", "matrix-power", MUST_PASS, _matrix_power, ("m",),
    default_axes={"m": _axis(DEFAULT_M_MAX)},
    description="M_m = M_0 Q^m with LaG_{k} = LaH_k - (1+p) LaH_{k-1}",
    notes=("the hybrid Leonardo matrices that use HLe_{-1} are not checked",),
))
register(CheckDefinition(
    "matrix-power/re-components", "matrix-power", MUST_PASS, _matrix_power_re, ("m",),
    default_axes={"m": _axis(DEFAULT_M_MAX)},
    description="matrix power identity on the real components of every entry",
))
register(CheckDefinition(
    "companion-cubic", "column-vector", MUST_PASS, _companion_cubic, (),
    description="Q^3 - (1+p)Q^2 - (q-p)Q + qI = 0",
))
for _reading in ("printed", "pattern-corrected"):
    register(CheckDefinition(
        f"cereceda-scalar/{_reading}", "cereceda-scalar", UNDER_TEST, _cereceda("scalar", _reading), ("n",),
        default_axes={"n": _axis(DEFAULT_CERECEDA_N_MAX)},
        description=f"bordered tridiagonal determinant ({_reading}) vs L_n",
        notes=("points with a = 0 or q = 0 are skipped",),
    ))
for _reading in ("printed", "pattern-corrected", "theorem"):
    register(CheckDefinition(
        f"cereceda-hybrid/{_reading}", "cereceda-hybrid", UNDER_TEST, _cereceda("hybrid", _reading), ("n",),
        default_axes={"n": _axis(DEFAULT_CERECEDA_N_MAX)},
        description=f"hybrid bordered tridiagonal determinant ({_reading}) vs LaH_n",
        notes=(
            "first-column cofactor expansion, entry before minor",
            "points with q = 0 or zero character of LaH_0 are skipped",
        ),
    ))


# --- Public checks ---

def check_character_formula(grid: GridSpec, **kwargs) -> IdentityReport:
    return run_check(BuiltinCheck("character"), grid, **kwargs)


def check_summation(grid: GridSpec, **kwargs) -> IdentityReport:
    return run_check(BuiltinCheck("summation"), grid, **kwargs)


def check_summation_leonardo(grid: GridSpec, **kwargs) -> IdentityReport:
    return run_check(BuiltinCheck("summation-leonardo"), grid, **kwargs)


def check_vajda(grid: GridSpec, form: str = "t2", **kwargs) -> IdentityReport:
    if form not in ("t1", "t2", "t2/corrected", "t2/as-stated"):
        raise ValueError(f"unknown Vajda form {form!r}")
    return run_check(BuiltinCheck(f"vajda-{form}"), grid, **kwargs)


COROLLARIES = ("catalan", "cassini", "docagne")


def check_corollaries(grid: GridSpec, corollary: Optional[str] = None, **kwargs) -> List[IdentityReport]:
    """Direct, corrected and via-Vajda reports for one corollary, or all three when none is named."""
    names = COROLLARIES if corollary is None else (corollary,)
    reports = []
    for name in names:
        if name not in COROLLARIES:
            raise ValueError(f"unknown corollary {name!r}; expected one of {COROLLARIES}")
        reports.append(run_check(BuiltinCheck(name), grid, **kwargs))
        reports.append(run_check(BuiltinCheck(f"{name}/corrected"), grid, **kwargs))
        reports.append(run_check(BuiltinCheck(f"{name}/via-vajda"), grid, **kwargs))
    return reports
