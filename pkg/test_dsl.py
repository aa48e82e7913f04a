"""Tests for the identity DSL: parsing, printing, error positions and evaluation."""

from fractions import Fraction

import pytest

from la_verifier.algebra.hybrid import Hybrid, character
from la_verifier.errors import DslSyntaxError, IndexOutOfDomain, UnboundVariable
from la_verifier.harness.catalog import DSL_CATALOG
from la_verifier.harness.dsl import (
    BinOp,
    Call,
    DslCheck,
    Identity,
    Neg,
    Num,
    Pow,
    Sym,
    eval_identity,
    format_identity,
    functions_used,
    load_dsl_checks,
    parse_identities,
    parse_identity,
    tokenize,
)
from la_verifier.harness.grid import GridSpec, run_check
from la_verifier.harness.reports import UNDER_TEST
from la_verifier.schemas import SeqParams
from la_verifier.sequences.hybrid import lah_by_definition

TRICKY = [
    "a - (b - c) == (a - b) - c",
    "-(LAH(n)*PSI) == -LAH(n)*PSI",
    "(-LAH(n))^2 == -LAH(n)^2",
    "1/2*p - -q == --r",
    "2/4*LAH(n+1) == (p + q)^3*(r - 1)",
    "KSHIFT(n - u, u + 1) == conj(HPART(n))*HS(m)",
]


# --- Parsing ---

def test_parse_tree():
    identity = parse_identity("LAH(n+1) == p*LAH(n) + q*LAH(n-1) + r*PSI")
    n = Sym("n")
    assert identity == Identity(
        Call("LAH", (BinOp("+", n, Num(Fraction(1))),)),
        BinOp(
            "+",
            BinOp(
                "+",
                BinOp("*", Sym("p"), Call("LAH", (n,))),
                BinOp("*", Sym("q"), Call("LAH", (BinOp("-", n, Num(Fraction(1))),))),
            ),
            BinOp("*", Sym("r"), Sym("PSI")),
        ),
    )


def test_unary_minus_and_powers():
    identity = parse_identity("-LAH(n)^2 == 1/2")
    assert identity.lhs == Neg(Pow(Call("LAH", (Sym("n"),)), 2))
    assert identity.rhs == Num(Fraction(1, 2))


@pytest.mark.parametrize("name", sorted(DSL_CATALOG))
def test_catalog_round_trip(name):
    identity = parse_identity(DSL_CATALOG[name][0])
    assert parse_identity(format_identity(identity)) == identity


@pytest.mark.parametrize("text", TRICKY)
def test_tricky_round_trip(text):
    identity = parse_identity(text)
    printed = str(identity)
    assert parse_identity(printed) == identity
    assert str(parse_identity(printed)) == printed


def test_tokenize_positions():
    tokens = tokenize("LAH(n)\n  == 1", line=3)
    assert [(t.kind, t.line, t.column) for t in tokens] == [
        ("name", 3, 1), ("(", 3, 4), ("name", 3, 5), (")", 3, 6), ("==", 4, 3), ("number", 4, 6), ("end", 4, 7),
    ]


# --- Malformed input ---

@pytest.mark.parametrize("src, column, expected", [
    ("LAH(n", 6, "')'"),
    ("LAH(n) ==", 10, "number"),
    ("LAH(n) LAH(n)", 8, "'=='"),
    ("LAH(n) == == 1", 11, "name"),
    ("KSHIFT(n) == 0", 9, "','"),
    ("(LAH(n) == LAH(n)", 9, "')'"),
    ("LAH(n) == LAH(n) == 1", 18, "end of input"),
])
def test_syntax_errors_report_expected_tokens(src, column, expected):
    with pytest.raises(DslSyntaxError) as info:
        parse_identity(src)
    assert info.value.line == 1
    assert info.value.column == column
    assert expected in info.value.expected


@pytest.mark.parametrize("src", ["LAH(n)^-1 == 1", "LAH(n)^1/2 == 1"])
def test_exponent_must_be_natural(src):
    with pytest.raises(DslSyntaxError) as info:
        parse_identity(src)
    assert info.value.column == 8
    assert info.value.expected == ("natural number",)


@pytest.mark.parametrize("src, column, reason", [
    ("1/0 == 0", 1, "zero denominator in literal"),
    ("LAH(n) $ 1", 8, "unexpected character '$'"),
    ("FOO(n) == 1", 1, "unknown function 'FOO'"),
    ("", 1, "empty identity"),
])
def test_syntax_error_reasons(src, column, reason):
    with pytest.raises(DslSyntaxError) as info:
        parse_identity(src)
    assert info.value.column == column
    assert info.value.reason == reason
    assert f"line 1, column {column}" in str(info.value)


def test_error_line_in_file():
    with pytest.raises(DslSyntaxError) as info:
        parse_identities("LAH(n) == LAH(n)\n\n# c\nLAH(n")
    assert (info.value.line, info.value.column) == (4, 6)


def test_file_without_identities():
    with pytest.raises(DslSyntaxError):
        parse_identities("# nothing here\n\n")


# --- Evaluation ---

def test_eval_trivial(leonardo):
    verdict = eval_identity(parse_identity("LAH(n) == LAH(n)"), leonardo, {"n": 3})
    assert verdict.holds
    assert verdict.lhs == lah_by_definition(leonardo, 3)


def test_eval_conjugate_product_is_scalar(leonardo):
    verdict = eval_identity(parse_identity("conj(LAH(n))*LAH(n) == LAH(n)*conj(LAH(n))"), leonardo, {"n": 0})
    assert verdict.holds
    assert verdict.lhs.is_scalar()
    assert verdict.lhs == character(lah_by_definition(leonardo, 0)) == -29


def test_eval_reports_both_sides(leonardo):
    verdict = eval_identity(parse_identity("PSI*PSI == 4"), leonardo, {})
    assert not verdict.holds
    assert verdict.lhs == Hybrid(3, 2, 2, 2)
    assert verdict.rhs == 4


def test_eval_recurrence(ernst):
    identity = parse_identity("LAH(n+2) == p*LAH(n+1) + q*LAH(n) + r*PSI")
    assert all(eval_identity(identity, ernst, {"n": n}).holds for n in range(10))


@pytest.mark.parametrize("src, bindings", [
    ("LAH(n-1) == 0", {"n": 0}),
    ("LA(1/2*n) == 0", {"n": 1}),
    ("KSHIFT(n, 0-2) == 0", {"n": 1}),
])
def test_index_out_of_domain(leonardo, src, bindings):
    with pytest.raises(IndexOutOfDomain):
        eval_identity(parse_identity(src), leonardo, bindings)


def test_unbound_variables(leonardo):
    with pytest.raises(UnboundVariable):
        DslCheck("dsl/x", parse_identity("x == 1"))
    with pytest.raises(UnboundVariable):
        DslCheck("dsl/x", parse_identity("LAH(p) == 0"))
    with pytest.raises(UnboundVariable):
        eval_identity(parse_identity("LAH(n) == LAH(m)"), leonardo, {"n": 1})


# --- Checks ---

def test_dsl_check_properties():
    plain = DslCheck("dsl/a", parse_identity("LAH(n+u) == LAH(u+n)"))
    assert plain.index_vars == ("n", "u")
    assert not plain.needs_rho
    assert plain.tier == UNDER_TEST
    assert not DslCheck("dsl/b", parse_identity("HS(m) == HS(m)")).needs_rho
    assert not DslCheck("dsl/c", parse_identity("rho == 1 - p - q")).needs_rho
    assert functions_used(parse_identity("KSHIFT(n, 1) == conj(LAH(n))")) == {"KSHIFT", "conj", "LAH"}


def test_load_dsl_checks_names():
    [single] = load_dsl_checks("LAH(n) == LAH(n)\n", "mine")
    assert single.name == "dsl/mine"
    several = load_dsl_checks("LA(n) == LA(n)\n# note\nLAH(n) == LAH(n)\n", "mine")
    assert [c.name for c in several] == ["dsl/mine-1", "dsl/mine-3"]


def test_dsl_check_runs_on_grid():
    [check] = load_dsl_checks("LA(n+2) == p*LA(n+1) + q*LA(n) + r", "inhomogeneous")
    report = run_check(check, GridSpec.named("leonardo", n=range(6)))
    assert report.ok
    assert report.total == 6
    assert report.identity == "dsl/inhomogeneous"


def test_homogeneous_checks_evaluate_at_zero_rho():
    text = "HPART(n+2) == p*HPART(n+1) + q*HPART(n)\nrho*LAH(n) == r*PSI + HPART(n)\n"
    grid = GridSpec.single(SeqParams(0, 1, 1, 1, 1), n=range(4))
    for check in load_dsl_checks(text, "zero-rho"):
        report = run_check(check, grid)
        assert report.ok, check.name
        assert (report.passed, report.skipped) == (4, 0)


def test_homogeneous_recurrence_skips_only_degenerate_discriminant(small_grid):
    [check] = load_dsl_checks("HPART(n+2) == p*HPART(n+1) + q*HPART(n)", "hpart")
    report = run_check(check, small_grid.with_indices(n=range(4)))
    assert report.ok
    # only the four p=2, q=-1 points (D = 0) are skipped
    assert (report.passed, report.skipped) == (128, 16)
