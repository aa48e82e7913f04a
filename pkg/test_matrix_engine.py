"""Tests for ring matrices, the companion matrix and bordered determinants."""

import random
from fractions import Fraction

import pytest

from la_verifier.algebra.hybrid import Hybrid
from la_verifier.errors import IndexOutOfDomain, NonInvertible, NonSquare, ShapeMismatch, ZeroCoefficient
from la_verifier.matrices.cereceda import (
    cereceda_determinant,
    cereceda_matrix,
    cereceda_reconstruction_check,
    leonardo_alwyn_cereceda_params,
)
from la_verifier.matrices.companion import (
    characteristic_cubic_check,
    column_vector_check,
    companion_matrix,
    lag,
    matrix_power_identity_check,
    power_matrix,
    window_column,
)
from la_verifier.matrices.ring_matrix import RingMatrix, generic_determinant, permutation_determinant
from la_verifier.schemas import SeqParams
from la_verifier.sequences.hybrid import lah_by_definition


def random_matrix(rng: random.Random, size: int) -> RingMatrix:
    return RingMatrix(size, size, (Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(size * size)))


# --- Ring matrices ---

def test_generic_determinant_matches_leibniz():
    rng = random.Random(1234)
    for _ in range(200):
        mat = random_matrix(rng, rng.randint(1, 5))
        assert generic_determinant(mat) == permutation_determinant(mat)


def test_determinant_needs_square():
    mat = RingMatrix(2, 3, range(6))
    with pytest.raises(NonSquare):
        generic_determinant(mat)
    with pytest.raises(NonSquare):
        mat.power(2)


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        RingMatrix(2, 2, [1, 2, 3])
    with pytest.raises(ShapeMismatch):
        RingMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeMismatch):
        RingMatrix.identity(2) * RingMatrix.identity(3)


def test_hybrid_entries_keep_order():
    i, h = Hybrid(0, 1), Hybrid(0, 0, 0, 1)
    left = RingMatrix.from_rows([[i]])
    right = RingMatrix.from_rows([[h]])
    assert (left * right)[0, 0] == i * h
    assert (right * left)[0, 0] == h * i
    assert (left * right) != (right * left)


# --- Companion matrix ---

def test_companion_matrix_leonardo(leonardo):
    assert companion_matrix(leonardo).to_rows() == [[2, 0, -1], [1, 0, 0], [0, 1, 0]]


def test_characteristic_cubic(small_grid):
    for _, params in small_grid.param_points():
        if params is not None:
            assert characteristic_cubic_check(params)


def test_column_vector(leonardo, ernst):
    assert column_vector_check(leonardo, 15).ok
    assert column_vector_check(ernst, 15).total == 16
    lah = lambda m: lah_by_definition(leonardo, m)  # noqa: E731
    assert companion_matrix(leonardo) * window_column(lah, 4) == window_column(lah, 5)


def test_matrix_power_identity(leonardo, ernst):
    assert matrix_power_identity_check(leonardo, 10).ok
    assert matrix_power_identity_check(ernst, 10).ok
    base = power_matrix(ernst, 0)
    assert power_matrix(ernst, 6) == base * companion_matrix(ernst).power(6)


def test_matrix_power_bounds(leonardo):
    with pytest.raises(IndexOutOfDomain):
        power_matrix(leonardo, -1)
    with pytest.raises(IndexOutOfDomain):
        lag(leonardo, 0)
    with pytest.raises(ValueError):
        matrix_power_identity_check(leonardo, -1)


def test_lag_leonardo(leonardo):
    # LaG_1 = LaH_1 - 2 LaH_0
    assert lag(leonardo, 1) == Hybrid(-1, 1, -1, -1)


# --- Bordered tridiagonal determinants ---

def test_cereceda_small_orders(leonardo, ernst):
    for params in (leonardo, ernst):
        cp = leonardo_alwyn_cereceda_params(params)
        assert cereceda_determinant(cp, 0) == cp.A
        assert cereceda_determinant(cp, 1) == cp.B
        hp = leonardo_alwyn_cereceda_params(params, "hybrid")
        assert cereceda_determinant(hp, 0) == lah_by_definition(params, 0)
        assert cereceda_determinant(hp, 1) == lah_by_definition(params, 1)


def test_cereceda_leonardo_readings(leonardo):
    assert cereceda_reconstruction_check(leonardo, 12).ok
    cp = leonardo_alwyn_cereceda_params(leonardo)
    assert cereceda_determinant(cp, 3) == 5
    assert cereceda_determinant(cp, 3, "pattern-corrected") == 7
    assert not cereceda_reconstruction_check(leonardo, 12, reading="pattern-corrected").ok


def test_cereceda_hybrid_report(leonardo):
    report = cereceda_reconstruction_check(leonardo, 12, mode="hybrid", reading="theorem")
    assert report.total == 13
    assert report.skipped == 0


def test_cereceda_matrix_shape(leonardo):
    cp = leonardo_alwyn_cereceda_params(leonardo)
    assert cereceda_matrix(cp, 4).shape == (5, 5)
    with pytest.raises(ValueError):
        cereceda_matrix(cp, 4, "theorem")
    with pytest.raises(ValueError):
        cereceda_matrix(cp, -1)


def test_cereceda_parameter_errors():
    with pytest.raises(ZeroCoefficient):
        leonardo_alwyn_cereceda_params(SeqParams(1, 0, 1, 1, 1))
    with pytest.raises(NonInvertible):
        leonardo_alwyn_cereceda_params(SeqParams(1, 1, 1, 0, 1))
    with pytest.raises(ValueError):
        leonardo_alwyn_cereceda_params(SeqParams(1, 1), "quaternion")
