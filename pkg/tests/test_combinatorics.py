from fractions import Fraction

import pytest

from oracles import (
    bell_oracle,
    bernoulli_recurrence,
    restricted_stirling_oracle,
    stirling_oracle,
)
from tropical_moduli.combinatorics import (
    bell,
    bernoulli,
    restricted_stirling2,
    set_partitions,
    stirling2,
)


def test_stirling2_base_cases():
    assert stirling2(0, 0) == 1
    assert stirling2(3, 0) == 0
    assert stirling2(2, 3) == 0
    assert stirling2(1, 1) == 1
    assert stirling2(2, 1) == 1
    assert stirling2(2, 2) == 1


def test_stirling2_four_two_brute_force():
    assert stirling_oracle(4, 2) == 7
    assert stirling2(4, 2) == 7


@pytest.mark.parametrize("m", range(9))
def test_bell_number_matches_partition_enumeration(m):
    assert sum(stirling2(m, r) for r in range(m + 1)) == bell_oracle(m)
    assert bell(m) == bell_oracle(m)


def test_restricted_stirling_examples():
    assert restricted_stirling2(3, 2, 2) == 3
    assert restricted_stirling2(4, 2, 2) == 3
    for n in range(1, 7):
        for r in range(1, n + 1):
            assert restricted_stirling2(n, r, 1) == (1 if r == n else 0)


@pytest.mark.parametrize("n", range(7))
def test_restricted_stirling_against_oracle(n):
    for r in range(n + 1):
        for m in (1, 2, 3, n + 1):
            assert restricted_stirling2(n, r, m) == restricted_stirling_oracle(
                n, r, m
            )


def test_restricted_stirling_bounded_by_stirling():
    for n in range(1, 9):
        for r in range(1, n + 1):
            for m in range(1, n + 2):
                res = restricted_stirling2(n, r, m)
                full = stirling2(n, r)
                assert res <= full
                if m >= n - r + 1:
                    assert res == full
                elif res == full:
                    assert res == 0


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)  # t/(e^t - 1) convention
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)


@pytest.mark.parametrize("g", range(13))
def test_bernoulli_stirling_identity_matches_recurrence(g):
    assert bernoulli(g) == bernoulli_recurrence(g)


def test_set_partitions_counts_and_uniqueness():
    for n in range(6):
        parts = [
            tuple(tuple(sorted(b)) for b in p)
            for p in set_partitions(range(n))
        ]
        assert len(parts) == len(set(parts)) == bell_oracle(n)
