"""Exact special-number sequences: Stirling, restricted Stirling, Bernoulli.

Everything here is exact integer or `fractions.Fraction` arithmetic; no
floating point is used anywhere in this package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


@lru_cache(maxsize=None)
def stirling2(m: int, r: int) -> int:
    """Stirling number of the second kind S(m, r).

    Counts partitions of an m-element set into r nonempty blocks.
    S(0, 0) = 1, S(m, 0) = 0 for m >= 1, and S(m, r) = 0 for r > m.
    """
    if m < 0 or r < 0:
        raise ValueError("stirling2 requires nonnegative arguments")
    if m == 0:
        return 1 if r == 0 else 0
    if r == 0 or r > m:
        return 0
    return r * stirling2(m - 1, r) + stirling2(m - 1, r - 1)


@lru_cache(maxsize=None)
def restricted_stirling2(n: int, r: int, m: int) -> int:
    """Number of partitions of an n-set into r nonempty blocks of size <= m.

    Equals stirling2(n, r) whenever m >= n.
    """
    if n < 0 or r < 0:
        raise ValueError("restricted_stirling2 requires nonnegative n, r")
    if m < 1:
        raise ValueError("block-size bound m must be positive")
    if n == 0:
        return 1 if r == 0 else 0
    if r == 0 or r > n or n > r * m:
        return 0
    # Condition on the block containing the last element: it holds j - 1
    # of the remaining n - 1 elements, 1 <= j <= m.
    total = 0
    for j in range(1, min(m, n) + 1):
        total += math.comb(n - 1, j - 1) * restricted_stirling2(n - j, r - 1, m)
    return total


def bell(n: int) -> int:
    """Bell number: total number of set partitions of an n-set."""
    return sum(stirling2(n, r) for r in range(n + 1))


@lru_cache(maxsize=None)
def bernoulli(g: int) -> Fraction:
    """Bernoulli number B_g in the t/(e^t - 1) convention, so B_1 = -1/2.

    Computed exactly from Stirling numbers of the second kind:
    B_g = sum_{l=0}^{g} (-1)^l * l!/(l+1) * S(g, l).

    Note the sign convention: the generating function t/(e^t - 1) forces
    B_1 = -1/2, not +1/2.
    """
    if g < 0:
        raise ValueError("bernoulli requires a nonnegative index")
    total = Fraction(0)
    for ell in range(g + 1):
        term = Fraction(math.factorial(ell), ell + 1) * stirling2(g, ell)
        total += -term if ell % 2 else term
    return total


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """Yield every set partition of `items` as a list of blocks.

    Blocks are produced in restricted-growth order, so the output is
    deterministic and each partition appears exactly once.
    """
    items = list(items)
    if not items:
        yield []
        return

    def extend(i: int, blocks: list[list]) -> Iterator[list[list]]:
        if i == len(items):
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(items[i])
            yield from extend(i + 1, blocks)
            b.pop()
        blocks.append([items[i]])
        yield from extend(i + 1, blocks)
        blocks.pop()

    yield from extend(0, [])
