"""Independent brute-force oracles used only by the tests.

Deliberately naive and written separately from the library code paths they
check: partitions via restricted-growth strings, isomorphism by trying all
vertex permutations, graph generation by exhausting labeled edge multisets.
"""

import math
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product

from tropical_moduli.chains import SparseMatrix
from tropical_moduli.graphs import StableGraph, is_stable


def iter_restricted_growth(n):
    """All restricted-growth strings of length n (= set partitions of [n])."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i, maximum):
        if i == n:
            yield tuple(rgs)
            return
        for v in range(maximum + 2):
            rgs[i] = v
            yield from rec(i + 1, max(maximum, v))

    yield from rec(1, 0)


def partition_blocks(rgs):
    blocks = {}
    for i, b in enumerate(rgs):
        blocks.setdefault(b, []).append(i)
    return list(blocks.values())


def bell_oracle(n):
    return sum(1 for _ in iter_restricted_growth(n))


def stirling_oracle(n, r):
    return sum(
        1 for rgs in iter_restricted_growth(n) if len(set(rgs)) == r
    )


def restricted_stirling_oracle(n, r, m):
    count = 0
    for rgs in iter_restricted_growth(n):
        blocks = partition_blocks(rgs)
        if len(blocks) == r and all(len(b) <= m for b in blocks):
            count += 1
    return count


def admissible_oracle(weights, r):
    weights = list(weights)
    count = 0
    for rgs in iter_restricted_growth(len(weights)):
        blocks = partition_blocks(rgs)
        if len(blocks) != r:
            continue
        if all(sum(weights[i] for i in b) <= 1 for b in blocks):
            count += 1
    return count


def bernoulli_recurrence(g):
    """Classical recurrence sum_{k=0}^{g} C(g+1, k) B_k = 0 for g >= 1."""
    values = [Fraction(1)]
    for j in range(1, g + 1):
        acc = sum(
            math.comb(j + 1, k) * values[k] for k in range(j)
        )
        values.append(Fraction(-acc, j + 1))
    return values[g]


def pairs_of_size_two_product(n, r):
    """Closed-form count of partitions into r blocks of size at most 2."""
    value = Fraction(1)
    for i in range(n - r):
        value *= math.comb(n - 2 * i, 2)
    value /= math.factorial(n - r)
    assert value.denominator == 1
    return int(value)


# -- graph oracles ------------------------------------------------------------


def graphs_isomorphic(a: StableGraph, b: StableGraph) -> bool:
    if (
        a.num_vertices != b.num_vertices
        or sorted(a.weights) != sorted(b.weights)
        or len(a.edges) != len(b.edges)
    ):
        return False
    target = (b.weights, tuple(sorted(b.edges)), b.markings)
    for perm in permutations(range(a.num_vertices)):
        h = a.relabel(perm)
        if (h.weights, tuple(sorted(h.edges)), h.markings) == target:
            return True
    return False


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_classes_oracle(g, w, num_edges):
    """Slow generate-and-dedup: labeled edge multisets, all weights and
    markings, stability filter, pairwise brute-force isomorphism dedup."""
    n = len(w)
    reps = []
    for b1 in range(0, g + 1):
        nv = num_edges - b1 + 1
        if nv < 1:
            continue
        slots = [(u, v) for u in range(nv) for v in range(u, nv)]
        for multi in combinations_with_replacement(slots, num_edges):
            for weights in _compositions(g - b1, nv):
                for markings in product(range(nv), repeat=n):
                    try:
                        graph = StableGraph(weights, tuple(multi), markings)
                    except ValueError:
                        continue  # disconnected
                    if not is_stable(graph, w):
                        continue
                    if not any(graphs_isomorphic(graph, r) for r in reps):
                        reps.append(graph)
    return reps


def random_sparse_matrix(rng, nrows, ncols, density=0.3):
    entries = {}
    for r in range(nrows):
        for c in range(ncols):
            if rng.random() < density:
                entries[(r, c)] = Fraction(
                    rng.randint(-5, 5), rng.randint(1, 4)
                )
    return SparseMatrix(nrows, ncols, {k: v for k, v in entries.items() if v})
