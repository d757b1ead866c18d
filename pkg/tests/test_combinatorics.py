from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cutideals import combinatorics as cb


@given(st.integers(0, 9), st.integers(0, 10))
def test_stirling_against_brute_force(n, k):
    assert cb.stirling2(n, k) == cb.brute_set_partitions(n, k)


@given(st.integers(0, 25), st.integers(0, 26))
def test_stirling_against_sympy(n, k):
    assert cb.stirling2(n, k) == sympy.functions.combinatorial.numbers.stirling(n, k, kind=2)


@given(st.integers(1, 25))
def test_stirling_k4_closed_form(n):
    assert cb.stirling2_k4_closed(n) == cb.stirling2(n, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_against_permutations(n):
    assert cb.eulerian_row(n) == cb.brute_eulerian_row(n)


@given(st.integers(1, 20))
def test_eulerian_rows_sum_to_factorial_and_are_symmetric(n):
    row = cb.eulerian_row(n)
    assert sum(row) == sympy.factorial(n)
    assert row == row[::-1]
    # Worpitzky: x^n = sum_k A(n,k) C(x+k-1, n)
    for x in range(1, 5):
        assert sum(a * comb(x + k - 1, n) for k, a in enumerate(row, start=1)) == x**n


def test_known_values():
    assert cb.cycle_generator_count(4) == 3
    assert cb.cycle_generator_count(5) == 30
    assert cb.cycle_generator_count(6) == 195
    assert cb.tree_generator_count(3) == 9
    assert cb.tree_generator_count(4) == 55
    assert [cb.claw_hilbert_degree2(n) for n in (1, 2, 3)] == [3, 10, 33]
    assert cb.eulerian_row(5) == [1, 26, 66, 26, 1]


@given(st.integers(1, 20))
def test_claw_closed_form_matches_recursion(n):
    assert cb.claw_hilbert_degree2(n) == cb.claw_hilbert_degree2_recursive(n)


def test_tree_hilbert_is_a_power():
    assert [cb.tree_hilbert(3, i) for i in range(4)] == [1, 8, 27, 64]


@pytest.mark.parametrize("fn,args", [
    (cb.stirling2, (31, 2)), (cb.stirling2, (3, -1)), (cb.eulerian, (3, 0)), (cb.eulerian, (3, 4)),
    (cb.eulerian_row, (0,)), (cb.cycle_generator_count, (2,)), (cb.tree_generator_count, (0,)),
    (cb.claw_hilbert_degree2, (0,)), (cb.tree_hilbert, (0, 1)),
])
def test_out_of_range_arguments(fn, args):
    with pytest.raises(ValueError):
        fn(*args)
