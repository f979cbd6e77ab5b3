"""Packed GF(2) bit vectors and matrices with deterministic elimination.

A Python int holds the packed words of a vector: bit j of the int is
coordinate j, so the word width never leaks into any contract.  All values
are immutable after construction and every operation is pure, which makes
concurrent read-only sharing safe.

Besides plain rank/kernel machinery this module hosts the subset-indicator
vectors eps_i over F_2^k (bit j set iff j is a binary submask of i), whose
bases and reflection identities drive the symmetric-annihilator rank tests.
"""

from __future__ import annotations

from typing import Iterable

__all__ = [
    "BitVec",
    "BitMatrix",
    "rank",
    "kernel_basis",
    "epsilon",
    "sum_epsilon_over",
]


class BitVec:
    """Immutable bit vector of fixed length.

    Unused high bits are always zero; constructing a vector whose packed
    value has bits at or above ``length`` is an error.
    """

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("length must be nonnegative")
        if bits < 0 or bits >> length:
            raise ValueError("bits outside the declared length")
        self.length = length
        self.bits = bits

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVec":
        bits = 0
        for j in indices:
            if not 0 <= j < length:
                raise ValueError(f"index {j} out of range for length {length}")
            bits |= 1 << j
        return cls(length, bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVec":
        """Parse '0'/'1' characters; the leftmost character is coordinate 0."""
        if not set(s) <= {"0", "1"}:
            raise ValueError("bit string must consist of '0' and '1'")
        bits = 0
        for j, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << j
        return cls(len(s), bits)

    def bit(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise ValueError(f"bit index {j} out of range")
        return (self.bits >> j) & 1

    def popcount(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> list[int]:
        """Positions of the set bits, ascending."""
        out = []
        b, j = self.bits, 0
        while b:
            if b & 1:
                out.append(j)
            b >>= 1
            j += 1
        return out

    def complement(self) -> "BitVec":
        mask = (1 << self.length) - 1
        return BitVec(self.length, self.bits ^ mask)

    def to01(self) -> str:
        """Render as '0'/'1' characters, coordinate 0 leftmost."""
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.length))

    def __xor__(self, other: "BitVec") -> "BitVec":
        if not isinstance(other, BitVec):
            return NotImplemented
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVec(self.length, self.bits ^ other.bits)

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        if isinstance(other, BitVec):
            return self.length == other.length and self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def __repr__(self) -> str:
        return f"BitVec({self.length}, 0b{self.to01()[::-1] or '0'})"


class BitMatrix:
    """Dense GF(2) matrix: a tuple of equal-length BitVec rows."""

    __slots__ = ("rows", "cols")

    def __init__(self, rows: Iterable[BitVec], cols: int | None = None):
        rows = tuple(rows)
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = rows[0].length
        for r in rows:
            if r.length != cols:
                raise ValueError("all rows must have length == cols")
        self.rows = rows
        self.cols = cols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls((BitVec(n, 1 << i) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, cols: int) -> "BitMatrix":
        return cls((BitVec(cols) for _ in range(nrows)), cols)

    def __eq__(self, other) -> bool:
        if isinstance(other, BitMatrix):
            return self.cols == other.cols and self.rows == other.rows
        return NotImplemented

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.cols})"


def _rref(row_bits: list[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2).

    Pivots are chosen left to right on the lowest-index nonzero column,
    taking the first available row, so the result is deterministic.
    Returns (pivot_columns, pivot_rows) with pivot_rows[i] carrying its
    pivot at pivot_columns[i].
    """
    work = list(row_bits)
    pivot_cols: list[int] = []
    top = 0
    for c in range(cols):
        pivot = None
        for i in range(top, len(work)):
            if (work[i] >> c) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        pr = work[top]
        for i in range(len(work)):
            if i != top and (work[i] >> c) & 1:
                work[i] ^= pr
        pivot_cols.append(c)
        top += 1
    return pivot_cols, work[:top]


def rank(m: BitMatrix) -> int:
    """GF(2) rank via Gaussian elimination."""
    pivot_cols, _ = _rref([r.bits for r in m.rows], m.cols)
    return len(pivot_cols)


def kernel_basis(m: BitMatrix) -> list[BitVec]:
    """Deterministic basis of the right kernel {x : m . x^T = 0}.

    One basis vector per free column, in ascending column order; empty
    exactly when rank == cols.
    """
    pivot_cols, rows = _rref([r.bits for r in m.rows], m.cols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = 1 << free
        for pc, row in zip(pivot_cols, rows):
            if (row >> free) & 1:
                x |= 1 << pc
        basis.append(BitVec(m.cols, x))
    return basis


def epsilon(i: int, k: int) -> BitVec:
    """k-bit indicator of the submasks of i below k: bit j set iff j is a
    binary submask of i and j < k."""
    if k <= 0:
        raise ValueError("k must be positive")
    if not 0 <= i <= 2 * k:
        raise ValueError(f"index {i} outside [0, {2 * k}]")
    bits = 0
    s = i
    while True:
        if s < k:
            bits |= 1 << s
        if s == 0:
            break
        s = (s - 1) & i
    return BitVec(k, bits)


def sum_epsilon_over(indices: Iterable[int], k: int, reflect: bool = False) -> BitVec:
    """GF(2) sum of epsilon(j, k) over an index set.

    With ``reflect`` the summand for j is epsilon(2k - j, k) instead.
    Duplicate indices are collapsed (set semantics).
    """
    acc = 0
    for j in set(indices):
        if not 0 <= j <= 2 * k:
            raise ValueError(f"index {j} outside [0, {2 * k}]")
        acc ^= epsilon(2 * k - j if reflect else j, k).bits
    return BitVec(k, acc)
