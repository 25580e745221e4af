"""The multiple logarithm and multi-Stirling numbers of the first kind.

For an index tuple ``(k_1, ..., k_r)`` the multiple logarithm is the
nested sum

    Li_{k_1,...,k_r}(t) = sum over chains 0 < m_1 < ... < m_r of
                          t^(m_r) / (m_1^k_1 * ... * m_r^k_r),

so the coefficient of ``t^m`` collects every ascending chain ending at
``m``.  A prefix-sum dynamic program produces the first ``order``
coefficients in O(r * order) exact operations and accepts any integer
indices, including zero and negative ones (the coefficients are then
rationals with growing numerators, which exact arithmetic absorbs).

The unsigned multi-Stirling numbers of the first kind are the
EGF-normalised coefficients ``n! * [t^n]`` of that series; for the
all-ones tuple they reduce to the classical unsigned Stirling numbers of
the first kind.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .report import FAIL, PASS, Mismatch, VerificationReport
from .series import Series, geometric

__all__ = [
    "index_tuple",
    "multilog",
    "multilog_coefficient",
    "multi_stirling1",
    "check_derivative_rules",
]


def index_tuple(ks) -> tuple[int, ...]:
    """Canonicalise an index tuple: at least one entry, all integers."""
    out = tuple(ks)
    if not out:
        raise ValueError("index tuple needs at least one entry")
    for k in out:
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValueError(f"index entries must be integers, got {k!r}")
    return out


@lru_cache(maxsize=None)
def _multilog(ks: tuple[int, ...], order: int) -> Series:
    # prev[m] = sum over chains of the processed prefix ending exactly at m;
    # the empty prefix contributes the single empty chain "ending" at 0.
    prev = [Fraction(0)] * (order + 1)
    prev[0] = Fraction(1)
    for k in ks:
        cur = [Fraction(0)] * (order + 1)
        below = Fraction(0)
        for m in range(order + 1):
            if m >= 1 and below:
                cur[m] = below * Fraction(m) ** (-k)
            below += prev[m]
        prev = cur
    return Series(prev)


def multilog(ks, order: int) -> Series:
    """Multiple-logarithm series truncated at ``order``."""
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ValueError(f"truncation order must be a non-negative integer, got {order!r}")
    return _multilog(index_tuple(ks), order)


def multilog_coefficient(ks, m: int) -> Fraction:
    """Coefficient of ``t^m`` by literal enumeration of ascending chains.

    Deliberately naive (it walks every chain); kept as an independent
    cross-check for the dynamic program.
    """
    ks = index_tuple(ks)
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("chain endpoint must be a positive integer")
    r = len(ks)
    total = Fraction(0)
    for head in combinations(range(1, m), r - 1):
        chain = head + (m,)
        term = Fraction(1)
        for mi, ki in zip(chain, ks):
            term *= Fraction(mi) ** (-ki)
        total += term
    return total


def multi_stirling1(ks, n: int, order: int | None = None) -> Fraction:
    """Unsigned multi-Stirling number of the first kind, ``n! * [t^n] Li``."""
    if order is None:
        order = n
    if n > order:
        raise ValueError(f"n={n} exceeds truncation order {order}")
    return multilog(ks, order).egf_coeff(n)


def check_derivative_rules(ks, order: int) -> VerificationReport:
    """Verify the two derivative recurrences of the multiple logarithm.

    Always: d/dt Li_{k_1,...,k_r}(t) = (1/t) Li_{k_1,...,k_r - 1}(t).
    When k_r = 1: d/dt Li_{k_1,...,k_{r-1},1}(t) = Li_{k_1,...,k_{r-1}}(t)/(1-t),
    with the empty prefix read as the constant series 1.
    Both are compared coefficientwise up to order - 1.
    """
    ks = index_tuple(ks)
    if order < 1:
        raise ValueError("derivative checks need order >= 1")
    lhs = multilog(ks, order).derivative()

    lowered = ks[:-1] + (ks[-1] - 1,)
    shifted = multilog(lowered, order).divide(Series.t(order), 1)
    for n in range(order):
        if lhs.coeff(n) != shifted.coeff(n):
            return VerificationReport(
                identity="derivative-rules",
                order=order,
                ks=ks,
                status=FAIL,
                first_mismatch=Mismatch(n, lhs.coeff(n), shifted.coeff(n)),
                detail="index-lowering rule",
            )

    if ks[-1] == 1:
        prefix = ks[:-1]
        tail = multilog(prefix, order - 1) if prefix else Series.one(order - 1)
        rhs = geometric(order - 1) * tail
        for n in range(order):
            if lhs.coeff(n) != rhs.coeff(n):
                return VerificationReport(
                    identity="derivative-rules",
                    order=order,
                    ks=ks,
                    status=FAIL,
                    first_mismatch=Mismatch(n, lhs.coeff(n), rhs.coeff(n)),
                    detail="prefix rule at trailing index 1",
                )

    return VerificationReport(identity="derivative-rules", order=order, ks=ks, status=PASS)
