"""Deterministic multi-indexed families built on the multiple logarithm:
multi-Stirling numbers of the second kind, multi-Bernoulli numbers and
multi-Lah numbers.

Each family is the EGF coefficient sequence of the multiple logarithm
composed with a specific inner series:

    second kind:   Li(1 - e^(1 - e^t))
    Bernoulli:     Li(1 - e^(-t)) / (1 - e^(-t))^r
    Lah:           Li(1 - e^(-t)) / (1 - t)^r

where r is always the length of the index tuple.  The Bernoulli division
has valuation r, so that series is computed at internal order N + r to
keep every requested coefficient exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .multilog import index_tuple, multilog
from .report import FAIL, PASS, Mismatch, VerificationReport
from .series import Series, exp_t, geometric, one_minus_exp_neg_t

__all__ = [
    "li_argument",
    "multi_stirling2",
    "multi_stirling2_series",
    "multi_bernoulli",
    "multi_bernoulli_series",
    "multi_lah",
    "multi_lah_series",
    "check_append_one_deterministic",
]


def li_argument(u: Series) -> Series:
    """1 - exp(1 - u) for a series with unit constant term.

    This is the substitution that turns a moment-type series into a valid
    (nilpotent) argument of the multiple logarithm.
    """
    if u.coeff(0) != 1:
        raise ValueError("li_argument requires a unit constant term")
    return 1 - (1 - u).exp()


@lru_cache(maxsize=None)
def _ms2_series(ks: tuple[int, ...], order: int) -> Series:
    return multilog(ks, order).compose(li_argument(exp_t(order)))


def multi_stirling2_series(ks, order: int) -> Series:
    return _ms2_series(index_tuple(ks), order)


def multi_stirling2(ks, n: int, order: int | None = None) -> Fraction:
    """Multi-Stirling number of the second kind; zero for n < r."""
    if order is None:
        order = n
    if n > order:
        raise ValueError(f"n={n} exceeds truncation order {order}")
    return multi_stirling2_series(ks, order).egf_coeff(n)


@lru_cache(maxsize=None)
def _bernoulli_series(ks: tuple[int, ...], order: int) -> Series:
    r = len(ks)
    work = order + r
    w = one_minus_exp_neg_t(work)
    return multilog(ks, work).compose(w).divide(w**r, r)


def multi_bernoulli_series(ks, order: int) -> Series:
    return _bernoulli_series(index_tuple(ks), order)


def multi_bernoulli(ks, n: int, order: int | None = None) -> Fraction:
    """Multi-Bernoulli number of the given index tuple."""
    if order is None:
        order = n
    if n > order:
        raise ValueError(f"n={n} exceeds truncation order {order}")
    return multi_bernoulli_series(ks, order).egf_coeff(n)


@lru_cache(maxsize=None)
def _lah_series(ks: tuple[int, ...], order: int) -> Series:
    r = len(ks)
    w = one_minus_exp_neg_t(order)
    return multilog(ks, order).compose(w) * geometric(order) ** r


def multi_lah_series(ks, order: int) -> Series:
    return _lah_series(index_tuple(ks), order)


def multi_lah(ks, n: int, order: int | None = None) -> Fraction:
    """Multi-Lah number; the second classical argument is always len(ks)."""
    if order is None:
        order = n
    if n > order:
        raise ValueError(f"n={n} exceeds truncation order {order}")
    return multi_lah_series(ks, order).egf_coeff(n)


def _ms2_or_delta(ks: tuple[int, ...], n: int, order: int) -> Fraction:
    """Multi-Stirling second kind extended to the empty tuple (delta at n = 0)."""
    if not ks:
        return Fraction(1 if n == 0 else 0)
    return multi_stirling2(ks, n, order)


def check_append_one_deterministic(ks_prefix, order: int) -> VerificationReport:
    """Appending a trailing index 1 is binomial summation over the prefix family:

        ms2(prefix + (1,), n + 1) = sum_{m} C(n, m) ms2(prefix, m).
    """
    prefix = tuple(ks_prefix)
    if prefix:
        prefix = index_tuple(prefix)
    full = prefix + (1,)
    r = len(full)
    for n in range(order):
        lhs = sum(
            (comb(n, m) * _ms2_or_delta(prefix, m, order) for m in range(r - 1, n + 1)),
            Fraction(0),
        )
        rhs = multi_stirling2(full, n + 1, order)
        if lhs != rhs:
            return VerificationReport(
                identity="append-one-deterministic",
                order=order,
                ks=prefix,
                status=FAIL,
                first_mismatch=Mismatch(n, lhs, rhs),
            )
    return VerificationReport(
        identity="append-one-deterministic", order=order, ks=prefix, status=PASS
    )
