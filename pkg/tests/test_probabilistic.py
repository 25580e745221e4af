from fractions import Fraction

import pytest

from multinumbers.classical import lah, stirling1, stirling2
from multinumbers.moments import (
    bernoulli,
    binomial,
    finite,
    geometric,
    moments,
    point,
    poisson,
)
from multinumbers.multi import multi_lah, multi_stirling2
from multinumbers.multilog import multi_stirling1
from multinumbers.probabilistic import (
    prob_fubini,
    prob_lah,
    prob_multi_lah,
    prob_multi_stirling2,
    prob_stirling2,
    prob_stirling2_by_moments,
)

from oracles import ordered_partition_count

F = Fraction

DISTS = [
    point(1),
    point(2),
    bernoulli(F(1, 2)),
    binomial(3, F(1, 3)),
    poisson(1),
    geometric(F(1, 2)),
    finite([(0, F(1, 2)), (2, F(1, 2))]),
]

MEAN_ZERO = finite([(-1, F(1, 2)), (1, F(1, 2))])


# ------------------------------------------------------- second kind


def test_point_one_second_kind_is_classical():
    ms = moments(point(1), 8)
    for n in range(9):
        for k in range(n + 1):
            assert prob_stirling2(ms, n, k, 8) == stirling2(n, k)


def test_second_kind_bernoulli_value_by_moment_sum():
    ms = moments(bernoulli(F(1, 2)), 4)
    # (1/2!) * (E[S_2^2] - 2 E[S_1^2] + E[S_0^2]) = (1/2)(3/2 - 1)
    assert prob_stirling2(ms, 2, 2, 4) == F(1, 4)
    assert prob_stirling2_by_moments(ms, 2, 2) == F(1, 4)


def test_second_kind_empty_cell():
    ms = moments(poisson(1), 4)
    assert prob_stirling2(ms, 0, 0, 4) == 1


@pytest.mark.parametrize("spec", DISTS + [MEAN_ZERO], ids=lambda s: s.label)
def test_route_agreement(spec):
    ms = moments(spec, 8)
    for n in range(9):
        for k in range(n + 1):
            assert prob_stirling2(ms, n, k, 8) == prob_stirling2_by_moments(ms, n, k)


# ------------------------------------------------------- multi second kind


def test_point_one_multi_second_kind_collapses():
    ms = moments(point(1), 10)
    for ks in [(1,), (2,), (1, 2), (2, 1), (1, 1, 1), (2, 3)]:
        for n in range(11):
            assert prob_multi_stirling2(ms, ks, n, 10) == multi_stirling2(ks, n, 10)


@pytest.mark.parametrize("spec", DISTS, ids=lambda s: s.label)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_all_ones_multi_second_kind_collapses(spec, r):
    ms = moments(spec, 9)
    for n in range(10):
        assert prob_multi_stirling2(ms, (1,) * r, n, 9) == prob_stirling2(ms, n, r, 9)


def test_multi_second_kind_bernoulli_value():
    # {2; (1,2)}_Y = 1/8 for Y ~ Bernoulli(1/2), frozen from the first-kind
    # inversion route: only (l, m) = (2, 2) contributes, giving
    # {2;2} * {2;2}_Y * [2; (1,2)] = 1 * 1/4 * 1/2.
    ms = moments(bernoulli(F(1, 2)), 4)
    by_inversion = sum(
        (-1) ** ((l - m) % 2)
        * stirling2(l, m)
        * prob_stirling2(ms, 2, l, 4)
        * multi_stirling1((1, 2), m, 4)
        for l in range(2, 3)
        for m in range(2, l + 1)
    )
    assert by_inversion == F(1, 8)
    assert prob_multi_stirling2(ms, (1, 2), 2, 4) == F(1, 8)


@pytest.mark.parametrize("ks", [(2,), (1, 2), (2, 3)])
def test_multi_families_vanish_below_r(ks):
    r = len(ks)
    for spec in (bernoulli(F(1, 2)), MEAN_ZERO):
        ms = moments(spec, 6)
        for n in range(r):
            assert prob_multi_stirling2(ms, ks, n, 6) == 0
            assert prob_multi_lah(ms, ks, n, 6) == 0


# ------------------------------------------------------- lah families


def test_point_one_lah_is_classical():
    ms = moments(point(1), 8)
    for n in range(9):
        for k in range(n + 1):
            assert prob_lah(ms, n, k, 8) == lah(n, k)


def test_lah_point_two_linear_value():
    ms = moments(point(2), 4)
    assert prob_lah(ms, 1, 1, 4) == 2
    assert prob_lah(ms, 0, 0, 4) == 1


@pytest.mark.parametrize("spec", DISTS, ids=lambda s: s.label)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_all_ones_multi_lah_collapses(spec, r):
    ms = moments(spec, 9)
    for n in range(10):
        assert prob_multi_lah(ms, (1,) * r, n, 9) == prob_lah(ms, n, r, 9)


def test_point_one_multi_lah_all_ones_values():
    ms = moments(point(1), 8)
    assert prob_multi_lah(ms, (1, 1), 3, 8) == 6


def test_point_one_multi_lah_differs_from_deterministic_off_all_ones():
    # The two defining compositions are different series for general indices:
    # at ks = (2,) they first disagree at n = 3 (19/6 against 14/3).
    ms = moments(point(1), 8)
    direct = prob_multi_lah(ms, (2,), 3, 8)
    corrected_sum = sum(
        prob_multi_stirling2(ms, (2,), k, 8) * stirling1(3, k) for k in range(1, 4)
    )
    assert direct == corrected_sum == F(19, 6)
    assert multi_lah((2,), 3, 8) == F(14, 3)
    assert direct != multi_lah((2,), 3, 8)


# ------------------------------------------------------- fubini


def test_fubini_at_zero():
    ms = moments(poisson(1), 5)
    assert prob_fubini(ms, 2, 0, 0, 5) == 1
    for n in range(1, 6):
        assert prob_fubini(ms, 2, 0, n, 5) == 0


def test_fubini_point_one_is_ordered_partition_count():
    ms = moments(point(1), 6)
    for n in range(7):
        assert prob_fubini(ms, 1, 1, n, 6) == ordered_partition_count(n)


@pytest.mark.parametrize("y", [F(1, 3), F(-2), F(5, 7)])
def test_fubini_linear_coefficient(y):
    # F_1^(r,Y)(y) = r * y * mu_1
    for spec in (point(1), poisson(1), bernoulli(F(1, 2))):
        ms = moments(spec, 3)
        for r in (1, 2, 3):
            assert prob_fubini(ms, r, y, 1, 3) == r * y * ms.moment(1)


def test_fubini_rejects_bad_arguments():
    ms = moments(point(1), 3)
    with pytest.raises(ValueError):
        prob_fubini(ms, 0, 1, 1, 3)
    with pytest.raises(ValueError):
        prob_fubini(ms, 1, 0.5, 1, 3)


def test_entry_range_checks():
    ms = moments(point(1), 4)
    with pytest.raises(ValueError):
        prob_stirling2(ms, 5, 1, 4)
    with pytest.raises(ValueError):
        prob_multi_lah(ms, (1,), 6, 5)
