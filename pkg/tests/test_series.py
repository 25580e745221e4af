from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multinumbers.series import (
    Series,
    exp_t,
    geometric,
    neg_log1m,
    one_minus_exp_neg_t,
)

from oracles import ordered_partition_count, stirling2_count

F = Fraction


def series(*coeffs):
    return Series([F(c) for c in coeffs])


# ---------------------------------------------------------------- basics


def test_length_is_order_plus_one():
    s = series(1, 2, 3)
    assert s.order == 2
    assert s.coeffs == (F(1), F(2), F(3))


def test_empty_coefficients_rejected():
    with pytest.raises(ValueError):
        Series([])


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Series([0.5])


def test_coeff_range_checked():
    s = series(1, 2)
    with pytest.raises(ValueError):
        s.coeff(5)
    with pytest.raises(ValueError):
        s.egf_coeff(3)


def test_order_mismatch_is_an_error():
    with pytest.raises(ValueError):
        series(1, 2) + series(1, 2, 3)
    with pytest.raises(ValueError):
        series(1, 2) * series(1, 2, 3)
    with pytest.raises(ValueError):
        series(0, 1).compose(series(0, 1, 0))


# ---------------------------------------------------------------- add / mul


def test_add_cancellation():
    assert series(1, 1) + series(1, -1) == series(2, 0)


def test_add_identity():
    f = series(3, F(1, 2), -4)
    assert f + Series.zero(2) == f


def test_add_exp_pair_kills_odd_terms():
    n = 8
    plus = exp_t(n)
    minus = Series(F((-1) ** k, factorial(k)) for k in range(n + 1))
    # termwise oracle for the sum of the two exponential series
    expected = Series(
        F(1, factorial(k)) + F((-1) ** k, factorial(k)) for k in range(n + 1)
    )
    assert plus + minus == expected
    assert all(expected.coeff(k) == 0 for k in range(1, n + 1, 2))


def test_mul_geometric_inverse():
    one_minus_t = series(1, -1, 0, 0, 0, 0)
    assert one_minus_t * geometric(5) == Series.one(5)


def test_mul_identity():
    f = series(F(2, 3), 0, 5, -1)
    assert f * Series.one(3) == f


def test_mul_exp_squared_by_convolution_oracle():
    n = 9
    prod = exp_t(n) * exp_t(n)
    for m in range(n + 1):
        oracle = sum(F(1, factorial(i)) * F(1, factorial(m - i)) for i in range(m + 1))
        assert prod.coeff(m) == oracle == F(2**m, factorial(m))


# ---------------------------------------------------------------- exp / log


def test_exp_of_zero():
    assert Series.zero(4).exp() == Series.one(4)


def test_exp_of_t():
    assert Series.t(6).exp() == exp_t(6)


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        series(1, 1).exp()


def test_exp_of_one_minus_exp():
    # 1 - e^t truncated at order 2 is -t - t^2/2; its exp is 1 - t + 0 t^2
    inner = series(0, -1, F(-1, 2))
    assert inner.exp() == series(1, -1, 0)


def test_log_trivials():
    assert Series.one(5).log() == Series.zero(5)
    assert geometric(7).log() == neg_log1m(7)


def test_log_requires_unit_constant_term():
    with pytest.raises(ValueError):
        series(2, 1).log()


def test_log_undoes_exp_on_polynomial():
    f = series(0, 1, 0, 1, 0)  # t + t^3
    assert f.exp().log() == f


# ---------------------------------------------------------------- compose


def test_compose_identity_substitution():
    f = series(5, -2, F(7, 3), 0, 1)
    assert f.compose(Series.t(4)) == f


def test_compose_mutual_inverses():
    n = 7
    expm1 = exp_t(n) - 1
    log1p = Series((-1) ** (k + 1) * F(1, k) if k else F(0) for k in range(n + 1))
    assert expm1.compose(log1p) == Series.t(n)


def test_compose_log_with_one_minus_exp_neg():
    n = 9
    assert neg_log1m(n).compose(one_minus_exp_neg_t(n)) == Series.t(n)


def test_compose_requires_nilpotent_inner():
    with pytest.raises(ValueError):
        series(0, 1).compose(series(1, 1))


# ---------------------------------------------------------------- inverse / divide


def test_inverse_trivials():
    assert Series.one(4).inverse() == Series.one(4)
    assert series(1, -1, 0, 0).inverse() == geometric(3)


def test_inverse_requires_nonzero_constant():
    with pytest.raises(ValueError):
        series(0, 1).inverse()


def test_inverse_of_two_minus_exp_counts_ordered_partitions():
    n = 5
    inv = (2 - exp_t(n)).inverse()
    for m in range(n + 1):
        assert inv.egf_coeff(m) == ordered_partition_count(m)


def test_divide_shift():
    t_sq = Series.t(5) ** 2
    assert t_sq.divide(Series.t(5), 1) == Series.t(4)


def test_divide_self_is_one():
    w = one_minus_exp_neg_t(6) ** 2
    assert w.divide(w, 2) == Series.one(4)


def test_divide_validates_valuations():
    t5 = Series.t(5)
    with pytest.raises(ValueError):
        (t5**2).divide(t5, 2)  # denominator valuation is 1, not 2
    with pytest.raises(ValueError):
        t5.divide(t5**2, 2)  # numerator valuation below 2


def test_derivative_drops_order():
    f = series(1, 2, 3, 4)
    assert f.derivative() == series(2, 6, 12)
    with pytest.raises(ValueError):
        Series.one(0).derivative()


# ---------------------------------------------------------------- egf view


def test_egf_trivials():
    assert exp_t(6).egf_coeff(5) == 1
    assert series(0, 0, F(1, 2)).egf_coeff(2) == 1


def test_egf_two_block_partitions():
    n = 6
    blocks2 = (exp_t(n) - 1) ** 2 * F(1, 2)
    for m in range(n + 1):
        assert blocks2.egf_coeff(m) == stirling2_count(m, 2)


# ---------------------------------------------------------------- properties

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=6)


def coeff_lists(order, **kwargs):
    return st.lists(small_fractions, min_size=order + 1, max_size=order + 1, **kwargs)


@given(st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.tuples(coeff_lists(n), coeff_lists(n), coeff_lists(n))
))
@settings(max_examples=80)
def test_ring_axioms(triple):
    a, b, c = (Series(x) for x in triple)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.integers(min_value=1, max_value=10).flatmap(lambda n: coeff_lists(n)))
@settings(max_examples=60)
def test_exp_log_round_trip(coeffs):
    coeffs[0] = Fraction(0)
    a = Series(coeffs)
    assert a.exp().log() == a
    b = Series([Fraction(1)] + coeffs[1:])
    assert b.log().exp() == b


@given(st.integers(min_value=0, max_value=10).flatmap(lambda n: coeff_lists(n)))
@settings(max_examples=60)
def test_mul_inverse_round_trip(coeffs):
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1, 2)
    a = Series(coeffs)
    assert a * a.inverse() == Series.one(a.order)


@given(st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.tuples(coeff_lists(n), coeff_lists(n), coeff_lists(n))
))
@settings(max_examples=60)
def test_compose_associativity(triple):
    f, g, h = (Series(x) for x in triple)
    g = Series([Fraction(0)] + list(g.coeffs[1:]))
    h = Series([Fraction(0)] + list(h.coeffs[1:]))
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


@given(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=7).flatmap(
        lambda n: st.tuples(coeff_lists(n), coeff_lists(n))
    ),
)
@settings(max_examples=60)
def test_divide_undoes_multiply(v, pair):
    q_coeffs, d_coeffs = pair
    order = len(q_coeffs) - 1 + v
    den = Series([Fraction(0)] * v + [Fraction(1)] + d_coeffs[1:])
    den_padded = Series(list(den.coeffs) + [Fraction(0)] * (order - den.order))
    q = Series(q_coeffs)
    q_padded = Series(list(q.coeffs) + [Fraction(0)] * v)
    prod = q_padded * den_padded
    assert prod.divide(den_padded, v) == q
