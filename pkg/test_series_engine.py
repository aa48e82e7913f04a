"""Tests for hybrid power series and the generating functions."""

from math import factorial

import pytest

from la_verifier.algebra.hybrid import Hybrid
from la_verifier.errors import DegenerateParameters, ShapeMismatch
from la_verifier.schemas import SeqParams
from la_verifier.sequences.hybrid import lah_by_definition, lah_terms
from la_verifier.sequences.series import (
    HybridSeries,
    check_egf,
    egf_coefficient,
    egf_coefficients,
    expand_ogf,
    ogf_denominator,
    ogf_numerator,
)


def test_leonardo_ogf_parts(leonardo):
    assert ogf_denominator(leonardo) == [1, -2, 0, 1]
    assert ogf_numerator(leonardo)[0] == Hybrid(1, 1, 3, 5)


def test_ogf_expansion_matches_terms(small_grid):
    for _, params in small_grid.param_points():
        if params is None:
            continue
        assert list(expand_ogf(params, 21).coefficients) == lah_terms(params, 21)


def test_egf_coefficients(ernst):
    coefficients = egf_coefficients(ernst, 12)
    for m, c in enumerate(coefficients):
        assert c * factorial(m) == lah_by_definition(ernst, m)
        assert egf_coefficient(ernst, m) == lah_by_definition(ernst, m)


def test_egf_printed_reading_diverges(leonardo):
    assert egf_coefficient(leonardo, 0, reading="printed") == lah_by_definition(leonardo, 0)
    assert egf_coefficient(leonardo, 1, reading="printed") != lah_by_definition(leonardo, 1)


def test_egf_rejects_unknown_reading(leonardo):
    with pytest.raises(ValueError):
        egf_coefficients(leonardo, 3, reading="typo")


def test_egf_needs_rho():
    with pytest.raises(DegenerateParameters):
        egf_coefficients(SeqParams(0, 1, 1, 1, 1), 3)


def test_check_egf(leonardo, ernst):
    assert check_egf(leonardo, 10).ok
    assert check_egf(ernst, 10).total == 10
    assert not check_egf(leonardo, 5, reading="printed").ok


def test_series_shapes():
    with pytest.raises(ShapeMismatch):
        HybridSeries((), 2) + HybridSeries((), 3)
    with pytest.raises(ValueError):
        HybridSeries((), 0)
    series = HybridSeries((Hybrid(1),), 3)
    assert series.coefficients == (Hybrid(1), Hybrid(), Hybrid())
    assert len(series.truncate(2)) == 2


def test_division_needs_unit_constant_term():
    with pytest.raises(ValueError):
        HybridSeries((Hybrid(1),), 3).divide_by_scalar_series([2, 1])


def test_division_inverts_multiplication():
    series = HybridSeries((Hybrid(1, 2), Hybrid(0, 0, 1), Hybrid(3, 0, 0, -1)), 6)
    scalars = [1, -1, 2]
    assert series.times_scalar_series(scalars).divide_by_scalar_series(scalars) == series
