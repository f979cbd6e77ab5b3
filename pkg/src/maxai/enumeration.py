"""Constructive catalog of the even-n symmetric functions with maximum
algebraic immunity n/2, the inverse classifier, and the weight catalog.

Writing k = n/2 and m = floor(log2 k), every such function is one of three
parameterized shapes over the cell family A_1..A_{m+1}:

  item1 -- each cell alternates: one value below k, its complement above;
           the center v(k) is a free bit.  Parameters (a_0, a_1..a_{m+1}).
  item2 -- as item1 on A_1..A_m, but the outermost pair k -+ 2^m carries
           the same value on both sides and the center the opposite one.
           Parameters (a_1..a_{m+1}) with a_{m+1} the pair value.
  item3 -- as item1 except one low-bit truncation i0 = k mod 2^p0 (p0 a set
           bit of k below m) and its mirror carry a fixed equal pair around
           the opposite center value: (v(i0), v(k), v(n-i0)) is 010 or 101.

The three shapes are pairwise disjoint, and there are exactly
(2*wt(n) + 1) * 2^floor(log2 n) functions in total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .orders import partition, prefix_predecessors
from .symfun import SymFn, hamming_weight

__all__ = [
    "ENUMERATION_LIMIT",
    "MaxAiRecord",
    "WeightCatalog",
    "build_item1",
    "build_item2",
    "build_item3",
    "enumerate_all",
    "classify",
    "weight_catalog",
]

ENUMERATION_LIMIT = 1024

TRIPLES = ((0, 1, 0), (1, 0, 1))


@dataclass(frozen=True)
class MaxAiRecord:
    """An enumerated maximum-immunity function with its shape tag and the
    parameters that rebuild it."""

    f: SymFn
    case: str  # "item1" | "item2" | "item3"
    params: tuple[int, ...]
    p0: int | None = None
    triple: tuple[int, int, int] | None = None

    @property
    def svv(self) -> str:
        return self.f.to_string()


@dataclass(frozen=True)
class WeightCatalog:
    """Closed-form Hamming weights of the enumerated functions.

    ``entries`` maps each weight to the producing parameters: None for the
    fully alternating family, otherwise the fixed-pair position i.
    """

    n: int
    entries: dict[int, tuple[int | None, ...]]

    def values(self) -> set[int]:
        return set(self.entries)


def _check_even(n: int) -> int:
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    return n // 2


def _check_bits(a, length: int) -> tuple[int, ...]:
    a = tuple(a)
    if len(a) != length or not all(b in (0, 1) for b in a):
        raise ValueError(f"expected {length} parameter bits")
    return a


def _cellwise(n: int, center: int, cell_values) -> list[int]:
    """Values list with v(k) = center and each cell alternating around k."""
    k = n // 2
    fam = partition(k)
    vals = [0] * (n + 1)
    vals[k] = center
    for t in range(1, len(fam.sets)):
        a = cell_values[t - 1]
        for x in fam.sets[t]:
            vals[x] = a if x < k else a ^ 1
    return vals


def build_item1(n: int, a) -> SymFn:
    """Fully alternating function: v(k) = a_0, cell t holds a_t below k and
    its complement above."""
    k = _check_even(n)
    m = k.bit_length() - 1
    a = _check_bits(a, m + 2)
    return SymFn.from_values(_cellwise(n, a[0], a[1:]))


def build_item2(n: int, a) -> SymFn:
    """Alternating except the outermost pair: v(k -+ 2^m) = a_{m+1} on both
    sides and v(k) = a_{m+1} + 1."""
    k = _check_even(n)
    m = k.bit_length() - 1
    a = _check_bits(a, m + 1)
    vals = _cellwise(n, a[-1] ^ 1, a)
    vals[k + (1 << m)] = a[-1]
    return SymFn.from_values(vals)


def build_item3(n: int, p0: int, a, triple) -> SymFn:
    """Alternating except at i0 = k mod 2^p0 and its mirror, which carry
    ``triple`` = (v(i0), v(k), v(n-i0)), either 010 or 101."""
    k = _check_even(n)
    m = k.bit_length() - 1
    if not (0 <= p0 < m and (k >> p0) & 1):
        raise ValueError("p0 must be a set bit of k below the top bit")
    a = _check_bits(a, m + 1)
    triple = tuple(triple)
    if triple not in TRIPLES:
        raise ValueError("triple must be (0,1,0) or (1,0,1)")
    i0 = k & ((1 << p0) - 1)
    vals = _cellwise(n, 0, a)
    vals[i0], vals[k], vals[n - i0] = triple
    return SymFn.from_values(vals)


def enumerate_all(n: int) -> list[MaxAiRecord]:
    """All maximum-immunity functions on n variables, sorted by value vector
    (treated as an integer with v(0) the most significant bit)."""
    k = _check_even(n)
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration is capped at n = {ENUMERATION_LIMIT}")
    m = k.bit_length() - 1
    records = []
    for a in product((0, 1), repeat=m + 2):
        records.append(MaxAiRecord(build_item1(n, a), "item1", a))
    for a in product((0, 1), repeat=m + 1):
        records.append(MaxAiRecord(build_item2(n, a), "item2", a))
    for p0 in range(m):
        if not (k >> p0) & 1:
            continue
        for a in product((0, 1), repeat=m + 1):
            for triple in TRIPLES:
                records.append(
                    MaxAiRecord(build_item3(n, p0, a, triple), "item3", a, p0, triple)
                )
    records.sort(key=lambda r: r.svv)
    expected = (2 * n.bit_count() + 1) << (n.bit_length() - 1)
    if len(records) != expected or len({r.svv for r in records}) != expected:
        raise AssertionError("enumeration produced a wrong or duplicated count")
    return records


def classify(f: SymFn) -> MaxAiRecord | None:
    """The unique record rebuilding to f, or None when f lacks maximum
    immunity.  classify(r.f) == r for every enumerated r."""
    n = f.n
    k = _check_even(n)
    m = k.bit_length() - 1
    fam = partition(k)
    v = [f.value(i) for i in range(n + 1)]

    fixed = [t for t in prefix_predecessors(k) if v[t] == v[n - t]]
    if len(fixed) > 1:
        return None

    if not fixed:
        a = [v[k]]
        for t in range(1, len(fam.sets)):
            below = [x for x in fam.sets[t] if x < k]
            at = v[below[0]]
            if any(v[x] != at for x in below):
                return None
            if any(v[n - x] != at ^ 1 for x in below):
                return None
            a.append(at)
        return MaxAiRecord(f, "item1", tuple(a))

    t0 = fixed[0]
    triple = (v[t0], v[k], v[n - t0])
    if triple not in TRIPLES:
        return None
    d = t0 ^ k
    p0 = (d & -d).bit_length() - 1
    a = []
    for t in range(1, len(fam.sets)):
        below = [x for x in fam.sets[t] if x < k and x != t0]
        if not below:
            at = triple[0]
        else:
            at = v[below[0]]
            if any(v[x] != at for x in below):
                return None
            if any(v[n - x] != at ^ 1 for x in below):
                return None
        a.append(at)
    if p0 == m:
        return MaxAiRecord(f, "item2", tuple(a))
    return MaxAiRecord(f, "item3", tuple(a), p0, triple)


def weight_catalog(n: int) -> WeightCatalog:
    """Closed-form weights: half the point count shifted by half the central
    binomial, further corrected by C(n, i) for each fixed-pair position i."""
    k = _check_even(n)
    base = 1 << (n - 1)
    half = math.comb(n, k) // 2
    raw: dict[int, list[int | None]] = {}

    def add(w: int, param: int | None) -> None:
        raw.setdefault(w, []).append(param)

    add(base + half, None)
    add(base - half, None)
    for i in prefix_predecessors(k):
        add(base + half - math.comb(n, i), i)
        add(base - half + math.comb(n, i), i)
    entries = {
        w: tuple(sorted(ps, key=lambda x: (x is not None, x if x is not None else -1)))
        for w, ps in raw.items()
    }
    return WeightCatalog(n, entries)
