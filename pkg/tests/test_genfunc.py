"""Rational generating functions and exact series extraction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import goldenseq as gs
from goldenseq.genfunc import GeneratingFunction, format_polynomial


def test_fibonacci_display():
    gf = gs.build_genfunc(gs.make_spec([1, 1]), gs.make_seeds([0, 1]))
    assert gf.display() == "z/(1 - z - z^2)"
    assert str(gf) == "z/(1 - z - z^2)"


def test_lucas_display_parenthesizes_numerator():
    gf = gs.build_genfunc(gs.make_spec([1, 1]), gs.make_seeds([2, 1]))
    assert gf.display() == "(2 - z)/(1 - z - z^2)"


def test_tribonacci_display():
    gf = gs.build_genfunc(gs.make_spec([1, 1, 1]), gs.make_seeds([0, 1, 1]))
    assert gf.display() == "z/(1 - z - z^2 - z^3)"


def test_series_matches_generate_on_presets():
    for coeffs, seeds in [
        ([1, 1], [0, 1]),
        ([1, 1], [2, 1]),
        ([1, 2], [0, 1]),
        ([1, 1, 1], [0, 1, 1]),
        (["1/2", "1/3"], [1, "5/7"]),
    ]:
        spec = gs.make_spec(coeffs)
        vec = gs.make_seeds(seeds)
        gf = gs.build_genfunc(spec, vec)
        assert gs.series_coefficients(gf, 20) == gs.generate(spec, vec, 20)


def test_direct_construction_constant_function():
    # numerator 1 over denominator 1 (empty tail): the unit series
    gf = GeneratingFunction((1,), (0,))
    assert gs.series_coefficients(gf, 5) == [1, 0, 0, 0, 0]


def test_direct_construction_geometric():
    gf = GeneratingFunction((1,), (0, Fraction(1, 2)))
    assert gs.series_coefficients(gf, 5) == [
        1,
        Fraction(1, 2),
        Fraction(1, 4),
        Fraction(1, 8),
        Fraction(1, 16),
    ]


def test_denominator_tail_must_start_at_zero():
    with pytest.raises(ValueError):
        GeneratingFunction((1,), (1, 1))


def test_series_count_validation():
    gf = GeneratingFunction((1,), (0,))
    assert gs.series_coefficients(gf, 0) == []
    with pytest.raises(ValueError):
        gs.series_coefficients(gf, -1)


def test_unit_function_step():
    assert gs.unit_function(0) == 1
    assert gs.unit_function(3) == 1
    assert gs.unit_function(-1) == 0


def test_format_polynomial_rendering():
    assert format_polynomial([]) == "0"
    assert format_polynomial([Fraction(0)]) == "0"
    assert format_polynomial([1, -1, -1]) == "1 - z - z^2"
    assert format_polynomial([0, Fraction(1, 2)]) == "(1/2)z"
    assert format_polynomial([-2, 0, 3]) == "-2 + 3z^2"
    assert format_polynomial([0, 1], variable="t") == "t"


def test_all_zero_seeds_give_zero_numerator():
    gf = gs.build_genfunc(gs.make_spec([1, 1]), gs.make_seeds([0, 0]))
    assert gf.display() == "0/(1 - z - z^2)"
    assert gs.series_coefficients(gf, 6) == [0] * 6


@settings(max_examples=60, deadline=None)
@given(
    coeffs=st.lists(st.integers(-5, 5), min_size=2, max_size=4),
    data=st.data(),
)
def test_series_round_trip(coeffs, data):
    spec = gs.make_spec(coeffs)
    seeds = gs.make_seeds(
        data.draw(
            st.lists(
                st.fractions(
                    min_value=-3, max_value=3, max_denominator=6
                ),
                min_size=spec.degree,
                max_size=spec.degree,
            )
        )
    )
    gf = gs.build_genfunc(spec, seeds)
    assert gs.series_coefficients(gf, 15) == gs.generate(spec, seeds, 15)
