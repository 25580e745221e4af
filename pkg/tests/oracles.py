"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive (exhaustive enumeration or textbook
recurrences) and shares no code with the library paths it checks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb


def set_partitions(elements: list):
    """Yield every partition of ``elements`` as a list of blocks."""
    if not elements:
        yield []
        return
    head, rest = elements[0], elements[1:]
    for partial in set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] + [head]] + partial[i + 1 :]
        yield partial + [[head]]


def stirling2_count(n: int, k: int) -> int:
    """Partitions of an n-set into exactly k blocks, by enumeration."""
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == k)


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return cycles


def stirling1_count(n: int, k: int) -> int:
    """Permutations of n elements with exactly k cycles, by enumeration."""
    return sum(1 for p in permutations(range(n)) if cycle_count(p) == k)


def ordered_partition_count(n: int) -> int:
    """Ordered set partitions of an n-set, by recursive block choice."""

    def count(mask: int) -> int:
        if mask == 0:
            return 1
        bits = [i for i in range(n) if mask & (1 << i)]
        total = 0
        # choose the first block: any nonempty subset of the remaining points
        for sub in range(1, 1 << len(bits)):
            block = 0
            for j, b in enumerate(bits):
                if sub & (1 << j):
                    block |= 1 << b
            total += count(mask & ~block)
        return total

    return count((1 << n) - 1)


def bell_numbers(count: int) -> list[int]:
    """First ``count`` Bell numbers via the Bell triangle."""
    values = [1]
    row = [1]
    while len(values) < count:
        nxt = [row[-1]]
        for entry in row:
            nxt.append(nxt[-1] + entry)
        row = nxt
        values.append(row[0])
    return values


def bernoulli_numbers(count: int) -> list[Fraction]:
    """B_0..B_{count-1} from sum_{j<=n} C(n+1, j) B_j = 0."""
    values: list[Fraction] = []
    for n in range(count):
        if n == 0:
            values.append(Fraction(1))
            continue
        acc = sum((comb(n + 1, j) * values[j] for j in range(n)), Fraction(0))
        values.append(-acc / (n + 1))
    return values


def bernoulli_higher_oracle(n_max: int, r: int) -> list[Fraction]:
    """EGF coefficients of (t/(e^t-1))^r by plain list convolution."""
    from math import factorial

    base = [b / factorial(n) for n, b in enumerate(bernoulli_numbers(n_max + 1))]
    acc = [Fraction(0)] * (n_max + 1)
    acc[0] = Fraction(1)
    for _ in range(r):
        nxt = [Fraction(0)] * (n_max + 1)
        for i, a in enumerate(acc):
            if not a:
                continue
            for j in range(n_max + 1 - i):
                nxt[i + j] += a * base[j]
        acc = nxt
    return [factorial(n) * c for n, c in enumerate(acc)]
