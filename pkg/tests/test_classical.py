from fractions import Fraction
from math import comb, factorial

import pytest

from multinumbers.classical import bernoulli_higher, lah, stirling1, stirling2
from multinumbers.series import Series, exp_t, geometric, neg_log1m

from oracles import bernoulli_higher_oracle, stirling1_count, stirling2_count

F = Fraction


def test_boundary_rows():
    for n in range(1, 8):
        assert stirling2(n, 1) == 1
        assert stirling1(n, n) == 1
        assert lah(n, 1) == factorial(n)
    assert stirling1(0, 0) == stirling2(0, 0) == lah(0, 0) == 1


def test_off_triangle_is_zero():
    assert stirling1(3, 5) == 0
    assert stirling2(2, -1) == 0
    assert lah(4, 9) == 0


def test_small_values_against_enumeration():
    for n in range(7):
        for k in range(n + 1):
            assert stirling2(n, k) == stirling2_count(n, k)
    for n in range(6):
        for k in range(n + 1):
            assert stirling1(n, k) == stirling1_count(n, k)


def test_lah_closed_form_values():
    assert lah(3, 3) == 1
    assert lah(3, 2) == comb(2, 1) * factorial(3) // factorial(2)
    assert lah(4, 2) == 36


def test_lah_is_stirling1_composed_with_stirling2():
    for n in range(11):
        for k in range(n + 1):
            assert lah(n, k) == sum(stirling1(n, j) * stirling2(j, k) for j in range(n + 1))


def test_signed_stirling_inversion():
    # the signed first-kind matrix (-1)^(n-k) [n; k] inverts the second-kind
    # matrix {n; k}, in either composition order
    n_max = 10
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            first_then_second = sum(
                (-1) ** ((n - k) % 2) * stirling1(n, k) * stirling2(k, m)
                for k in range(n_max + 1)
            )
            second_then_first = sum(
                stirling2(n, k) * (-1) ** ((k - m) % 2) * stirling1(k, m)
                for k in range(n_max + 1)
            )
            expected = 1 if n == m else 0
            assert first_then_second == expected
            assert second_then_first == expected


def test_egf_cross_checks():
    n_max = 10
    for k in range(5):
        blocks = (exp_t(n_max) - 1) ** k * F(1, factorial(k))
        cycles = neg_log1m(n_max) ** k * F(1, factorial(k))
        lists = (Series.t(n_max) * geometric(n_max)) ** k * F(1, factorial(k))
        for n in range(n_max + 1):
            assert blocks.egf_coeff(n) == stirling2(n, k)
            assert cycles.egf_coeff(n) == stirling1(n, k)
            assert lists.egf_coeff(n) == lah(n, k)


def test_bernoulli_higher_basics():
    for r in range(5):
        assert bernoulli_higher(0, r) == 1
    assert bernoulli_higher(1, 1) == F(-1, 2)
    assert bernoulli_higher(2, 1) == F(1, 6)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_bernoulli_higher_against_convolution_oracle(r):
    oracle = bernoulli_higher_oracle(8, r)
    for n in range(9):
        assert bernoulli_higher(n, r, 8) == oracle[n]


def test_bernoulli_higher_range_check():
    with pytest.raises(ValueError):
        bernoulli_higher(5, 1, order=4)
