"""Two partial orders on nonnegative integers and the derived index sets.

``lucas_leq`` is the digitwise order: b <= a bit by bit, equivalently the
binomial C(a, b) is odd.  ``prime_leq`` is the low-bits prefix order: b is
zero or equals a on every position up to b's highest set bit.

For k = n/2 the prefix predecessors of k and their reflections form the
exempt set B; the remaining positions 0..2k split into cells A_i whose
members agree with k on their lowest i bits except the (i-1)-th, which is
flipped.  These cells are where max-immunity functions must alternate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "lucas_leq",
    "lucas_lt",
    "prime_leq",
    "prime_lt",
    "prefix_predecessors",
    "bset",
    "partition",
    "aset_index_of",
    "PartitionFamily",
]


def lucas_leq(b: int, a: int) -> bool:
    """True iff every binary digit of b is <= the matching digit of a."""
    if b < 0 or a < 0:
        raise ValueError("arguments must be nonnegative")
    return b & a == b


def lucas_lt(b: int, a: int) -> bool:
    return b != a and lucas_leq(b, a)


def prime_leq(b: int, a: int) -> bool:
    """Prefix order: b == 0, or b equals the low bits of a up to b's top bit.

    Defined for all nonnegative a for totality: against a == 0 only b == 0
    compares.
    """
    if b < 0 or a < 0:
        raise ValueError("arguments must be nonnegative")
    if b == 0:
        return True
    return a & ((1 << b.bit_length()) - 1) == b


def prime_lt(b: int, a: int) -> bool:
    return b != a and prime_leq(b, a)


def prefix_predecessors(k: int) -> list[int]:
    """Sorted list of the strict prefix predecessors {i : i < k in the
    prefix order}; these are exactly k mod 2^p over the set bits p of k."""
    if k <= 0:
        raise ValueError("k must be positive")
    return sorted({k % (1 << p) for p in range(k.bit_length()) if (k >> p) & 1})


@lru_cache(maxsize=None)
def bset(k: int) -> tuple[int, ...]:
    """The exempt positions {i, 2k - i : i a strict prefix predecessor of k},
    sorted; its size is twice the binary weight of k."""
    preds = prefix_predecessors(k)
    return tuple(sorted({i for p in preds for i in (p, 2 * k - p)}))


@dataclass(frozen=True)
class PartitionFamily:
    """Cells A_0..A_top partitioning {0..2k}, plus the exempt set B.

    A_0 = {k}; for i >= 1 the members of A_i are k +- odd multiples of
    2^(i-1), i.e. the positions whose lowest i bits match k's except the
    (i-1)-th.  Cells are reflection-closed around k.
    """

    k: int
    sets: tuple[tuple[int, ...], ...]
    bset: tuple[int, ...]


@lru_cache(maxsize=None)
def partition(k: int) -> PartitionFamily:
    """Build the cell family for k; indices run 0..floor(log2(2k))."""
    if k <= 0:
        raise ValueError("k must be positive")
    top = (2 * k).bit_length() - 1
    sets = [(k,)]
    for i in range(1, top + 1):
        step = 1 << (i - 1)
        jmax = ((k >> (i - 1)) - 1) // 2
        cell = []
        for j in range(jmax + 1):
            off = (2 * j + 1) * step
            cell.append(k - off)
            cell.append(k + off)
        sets.append(tuple(sorted(cell)))
    return PartitionFamily(k, tuple(sets), bset(k))


def aset_index_of(j: int, k: int) -> int:
    """The unique i with j in A_i: 0 when j == k, else one past the position
    of the lowest bit where j and k differ."""
    if k <= 0:
        raise ValueError("k must be positive")
    if not 0 <= j <= 2 * k:
        raise ValueError(f"index {j} outside [0, {2 * k}]")
    if j == k:
        return 0
    d = j ^ k
    return (d & -d).bit_length()
