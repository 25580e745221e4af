"""Probabilistic number families attached to a random variable Y.

Every family replaces a deterministic building block by its moment
transform: e^t becomes the moment EGF M(t) = E[e^(Yt)], and powers of
1/(1-t) become R(t) = E[(1/(1-t))^Y].  Concretely:

    second kind          n! [t^n] (M - 1)^k / k!
    multi second kind    n! [t^n] Li(1 - e^(1 - M))
    Lah                  n! [t^n] (R - 1)^k / k!
    multi Lah            n! [t^n] Li(1 - e^(1 - R))
    Fubini, order r      n! [t^n] (1 - y (M - 1))^(-r)

The second-kind numbers also admit an inclusion-exclusion form over the
moments of partial sums S_j = Y_1 + ... + Y_j, kept here as the
independent route :func:`prob_stirling2_by_moments`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .moments import MomentSequence, mgf, resolvent, sum_power_moment
from .multi import li_argument
from .multilog import index_tuple, multilog
from .series import Series

__all__ = [
    "prob_stirling2",
    "prob_stirling2_series",
    "prob_stirling2_by_moments",
    "prob_multi_stirling2",
    "prob_multi_stirling2_series",
    "prob_lah",
    "prob_lah_series",
    "prob_multi_lah",
    "prob_multi_lah_series",
    "prob_fubini",
    "prob_fubini_series",
]


def _check_entry(n: int, order: int | None) -> int:
    if order is None:
        order = n
    if n > order:
        raise ValueError(f"n={n} exceeds truncation order {order}")
    return order


@lru_cache(maxsize=None)
def _gap_power_over_factorial(ms: MomentSequence, k: int, order: int) -> Series:
    # (M - 1)^k / k!, built incrementally so a full table costs one product per k
    if k == 0:
        return Series.one(order)
    prev = _gap_power_over_factorial(ms, k - 1, order)
    return prev * (mgf(ms, order) - 1) * Fraction(1, k)


def prob_stirling2_series(ms: MomentSequence, k: int, order: int) -> Series:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    return _gap_power_over_factorial(ms, k, order)


def prob_stirling2(ms: MomentSequence, n: int, k: int, order: int | None = None) -> Fraction:
    """Probabilistic Stirling number of the second kind (EGF route)."""
    order = _check_entry(n, order)
    return prob_stirling2_series(ms, k, order).egf_coeff(n)


def prob_stirling2_by_moments(ms: MomentSequence, n: int, k: int) -> Fraction:
    """Same number by the inclusion-exclusion sum over moments of S_j.

    (1/k!) sum_{j=0}^{k} C(k,j) (-1)^(k-j) E[S_j^n]; kept as an independent
    cross-check of the EGF route.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    total = Fraction(0)
    for j in range(k + 1):
        sign = 1 if (k - j) % 2 == 0 else -1
        total += sign * comb(k, j) * sum_power_moment(ms, j, n)
    return total / factorial(k)


@lru_cache(maxsize=None)
def _multi_s2_series(ms: MomentSequence, ks: tuple[int, ...], order: int) -> Series:
    return multilog(ks, order).compose(li_argument(mgf(ms, order)))


def prob_multi_stirling2_series(ms: MomentSequence, ks, order: int) -> Series:
    return _multi_s2_series(ms, index_tuple(ks), order)


def prob_multi_stirling2(ms: MomentSequence, ks, n: int, order: int | None = None) -> Fraction:
    """Probabilistic multi-Stirling number of the second kind."""
    order = _check_entry(n, order)
    return prob_multi_stirling2_series(ms, ks, order).egf_coeff(n)


@lru_cache(maxsize=None)
def _resolvent_gap_power(ms: MomentSequence, k: int, order: int) -> Series:
    if k == 0:
        return Series.one(order)
    prev = _resolvent_gap_power(ms, k - 1, order)
    return prev * (resolvent(ms, order) - 1) * Fraction(1, k)


def prob_lah_series(ms: MomentSequence, k: int, order: int) -> Series:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    return _resolvent_gap_power(ms, k, order)


def prob_lah(ms: MomentSequence, n: int, k: int, order: int | None = None) -> Fraction:
    """Probabilistic Lah number, n! [t^n] (R - 1)^k / k!."""
    order = _check_entry(n, order)
    return prob_lah_series(ms, k, order).egf_coeff(n)


@lru_cache(maxsize=None)
def _multi_lah_series(ms: MomentSequence, ks: tuple[int, ...], order: int) -> Series:
    return multilog(ks, order).compose(li_argument(resolvent(ms, order)))


def prob_multi_lah_series(ms: MomentSequence, ks, order: int) -> Series:
    return _multi_lah_series(ms, index_tuple(ks), order)


def prob_multi_lah(ms: MomentSequence, ks, n: int, order: int | None = None) -> Fraction:
    """Probabilistic multi-Lah number."""
    order = _check_entry(n, order)
    return prob_multi_lah_series(ms, ks, order).egf_coeff(n)


@lru_cache(maxsize=None)
def _fubini_series(ms: MomentSequence, r: int, y: Fraction, order: int) -> Series:
    den = (1 - y * (mgf(ms, order) - 1)) ** r
    return den.inverse()


def prob_fubini_series(ms: MomentSequence, r: int, y, order: int) -> Series:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"the order r must be a positive integer, got {r!r}")
    if isinstance(y, float):
        raise ValueError("y must be exact (int, Fraction or 'a/b' string), not float")
    return _fubini_series(ms, r, Fraction(y), order)


def prob_fubini(ms: MomentSequence, r: int, y, n: int, order: int | None = None) -> Fraction:
    """Probabilistic Fubini polynomial of order r evaluated at the rational y."""
    order = _check_entry(n, order)
    return prob_fubini_series(ms, r, y, order).egf_coeff(n)
