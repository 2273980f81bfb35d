"""Exact cardinality formulas for the semigroups attached to a partition.

All results are plain Python integers, so counts stay exact at any size.
The two Sigma counts are deliberately separate implementations: the direct
form sums over all block permutations one by one, the grouped form sums
over multiset arrangements of the block sizes.  Keeping the direct form
naive lets the two validate each other.
"""

from __future__ import annotations

from math import comb, factorial, prod
from typing import Iterator

from .core import DEFAULT_GUARD, PartitionProfile, SetPartition, check_guard

import itertools


def idempotent_count(n: int) -> int:
    """Number of idempotent selfmaps on an n-point set."""
    if n < 1:
        raise ValueError("ground-set size must be positive")
    return sum(comb(n, j) * j ** (n - j) for j in range(1, n + 1))


def count_t(profile: PartitionProfile) -> int:
    """Number of maps sending every block into a block.

    A map is assembled blockwise; a block of size s has ``sum(m_j * s_j**s)``
    possible restrictions, one term per choice of codomain block.
    """
    entries = profile.entries
    return prod(
        sum(mult_j * size_j**size_i for size_j, mult_j in entries) ** mult_i
        for size_i, mult_i in entries
    )


def count_units(profile: PartitionProfile) -> int:
    """Size of the group of units: m_i! block arrangements per size class,
    times n_i! bijections per block."""
    return prod(factorial(mult) * factorial(size) ** mult for size, mult in profile.entries)


def count_sigma_direct(p: SetPartition, guard: int = DEFAULT_GUARD) -> int:
    """Sigma count as a sum over all block permutations.

    Each bijective assignment phi of codomain blocks contributes the product
    of |X_phi(i)| ** |X_i| over the blocks.  Kept naive on purpose; use
    :func:`count_sigma_grouped` for anything with many blocks.
    """
    sizes = p.sizes
    m = p.m
    check_guard(factorial(m), guard, "block permutations")
    total = 0
    for phi in itertools.permutations(range(m)):
        term = 1
        for i, j in enumerate(phi):
            term *= sizes[j] ** sizes[i]
        total += term
    return total


def count_sigma_grouped(profile: PartitionProfile, guard: int = DEFAULT_GUARD) -> int:
    """Sigma count grouped by which size class each domain block lands in.

    Distribute the multiset of block sizes into k ordered groups, group i
    holding m_i of them; a distribution with group sums s_1, ..., s_k
    contributes ``n_1**s_1 * ... * n_k**s_k``.  The sum over all distinct
    distributions, scaled by ``m_1! * ... * m_k!``, equals the direct
    permutation sum.
    """
    entries = profile.entries
    m = profile.m
    arrangements = factorial(m) // prod(factorial(mult) for _, mult in entries)
    check_guard(arrangements, guard, "multiset arrangements")
    values = [size for size, _ in entries]
    counts = [mult for _, mult in entries]
    total = 0
    for seq in _multiset_permutations(values, counts):
        term = 1
        pos = 0
        for size, mult in entries:
            term *= size ** sum(seq[pos : pos + mult])
            pos += mult
        total += term
    return prod(factorial(mult) for _, mult in entries) * total


def count_sigma_idempotents(profile: PartitionProfile) -> int:
    """Number of idempotents among the maps whose image meets every block.

    Such idempotents restrict to an independent idempotent selfmap on each
    block, so the count is a product of per-block idempotent counts.
    """
    return prod(idempotent_count(size) ** mult for size, mult in profile.entries)


def _multiset_permutations(values: list[int], counts: list[int]) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements of the multiset, in lexicographic order."""
    remaining = list(counts)
    total = sum(remaining)
    seq = [0] * total

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == total:
            yield tuple(seq)
            return
        for v_idx, v in enumerate(values):
            if remaining[v_idx]:
                remaining[v_idx] -= 1
                seq[i] = v
                yield from rec(i + 1)
                remaining[v_idx] += 1

    yield from rec(0)
