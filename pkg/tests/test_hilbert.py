import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cutideals import corpus
from cutideals.combinatorics import eulerian_row
from cutideals.cuts import ExponentMatrix, cut_exponent_matrix
from cutideals.errors import BudgetExceeded
from cutideals.hilbert import (HilbertSeries, default_window, degree_from_series, format_report,
                               h_vector_symmetric, hilbert_function_value, hilbert_polynomial_value,
                               hilbert_series_from_initial, is_hilbertian, regularity, semigroup_hilbert,
                               semigroup_table, series_table, standard_monomial_count)
from cutideals.toric.ideal import toric_ideal

QUARTIC = ExponentMatrix(("a", "b"), ("w", "x", "y", "z"), ((1, 1, 1, 1), (0, 1, 3, 4)))


def series_of(m):
    gb = toric_ideal(m)
    return hilbert_series_from_initial(gb.leads, len(m.columns))


def cut_series(name):
    return series_of(cut_exponent_matrix(corpus.load(name)))


monomial_ideals = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(*[st.integers(0, 3)] * n), max_size=4)))


@given(monomial_ideals)
def test_series_matches_standard_monomial_count(case):
    n, leads = case
    ser = hilbert_series_from_initial(leads, n)
    for j in range(6):
        assert hilbert_function_value(ser, j) == standard_monomial_count(leads, n, j)


@given(monomial_ideals)
def test_series_expansion_agrees_with_sympy(case):
    n, leads = case
    ser = hilbert_series_from_initial(leads, n)
    t = sympy.symbols("t")
    expr = sum(h * t**k for k, h in enumerate(ser.numerator)) / (1 - t) ** ser.denominator_power
    coeffs = sympy.Poly(sympy.series(expr, t, 0, 6).removeO(), t).all_coeffs()[::-1] if expr != 0 else []
    coeffs = list(coeffs) + [0] * (6 - len(coeffs))
    assert [hilbert_function_value(ser, j) for j in range(6)] == coeffs


@given(monomial_ideals)
def test_polynomial_agrees_with_function_in_high_degree(case):
    n, leads = case
    ser = hilbert_series_from_initial(leads, n)
    start = max(0, ser.numerator_degree - ser.denominator_power + 1)
    for j in range(start, start + 4):
        assert hilbert_polynomial_value(ser, j) == hilbert_function_value(ser, j)


def test_reduced_to_lowest_terms():
    # ideal (x) in two variables: 1/(1-t)
    assert hilbert_series_from_initial([(1, 0)], 2) == HilbertSeries((1,), 1)
    assert hilbert_series_from_initial([], 3) == HilbertSeries((1,), 3)
    assert hilbert_series_from_initial([(0, 0)], 2).numerator == (0,)


@pytest.mark.parametrize("name", ["C4", "C5", "path3", "star3", "triangle_edge_C4"])
def test_two_routes_agree_on_cut_rings(name):
    m = cut_exponent_matrix(corpus.load(name))
    ser = series_of(m)
    assert semigroup_table(m, 5).values == series_table(ser, 5).values
    assert [semigroup_hilbert(m, d) for d in range(4)] == list(series_table(ser, 3).values)


@pytest.mark.parametrize("name,h", [
    ("C4", (1, 3, 3, 1)), ("C5", (1, 10, 25, 16)), ("K4", (1, 1, 1, 1)),
])
def test_known_h_vectors(name, h):
    # C4 is cut out by three quadrics in eight variables: (1 + t)^3
    assert cut_series(name).numerator == h


def test_six_cycle_h_vector():
    ser = cut_series("C6")
    assert ser.numerator == (1, 25, 130, 162, 25, 1)
    assert not h_vector_symmetric(ser)


@pytest.mark.parametrize("edges", [1, 2, 3, 4])
def test_tree_numerators_are_eulerian(edges):
    for name in (f"path{edges}" if edges > 1 else "K2", f"star{edges}" if edges > 1 else "K2"):
        ser = cut_series(name)
        assert list(ser.numerator) == eulerian_row(edges)
        assert ser.denominator_power == edges + 1
        assert h_vector_symmetric(ser)


def test_regularity_report():
    reg = regularity(cut_series("star4"), 4)
    assert (reg.reg_ring, reg.reg_variety, reg.bound_e_plus_1, reg.within_bound) == (3, 4, 5, True)


def test_degree_and_window():
    ser = cut_series("C5")
    assert degree_from_series(ser) == 52
    assert default_window(ser) == 5
    assert default_window(HilbertSeries((1,), 2)) == 4


def test_normal_rings_are_hilbertian():
    m = cut_exponent_matrix(corpus.load("C5"))
    assert is_hilbertian(m, series_of(m), 4)


def test_a_non_normal_curve_is_not_hilbertian():
    ser = series_of(QUARTIC)
    assert ser.denominator_power == 2
    assert semigroup_table(QUARTIC, 3).values == (1, 4, 9, 13)
    assert [hilbert_polynomial_value(ser, j) for j in range(4)] == [1, 5, 9, 13]
    assert not is_hilbertian(QUARTIC, ser, 3)


def test_semigroup_budget():
    m = cut_exponent_matrix(corpus.load("C5"))
    with pytest.raises(BudgetExceeded):
        semigroup_table(m, 3, budget=100)
    with pytest.raises(BudgetExceeded):
        semigroup_hilbert(m, 3, budget=100)


def test_format_report():
    text = format_report([("a", True), ("b", (1, 2)), ("c", 3)])
    assert text == "a = true\nb = 1,2\nc = 3\n"
