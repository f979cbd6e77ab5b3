"""Symmetric Boolean functions held as simplified value vectors.

An n-variable symmetric function is the (n+1)-bit vector of its values per
input weight.  The dual coefficient vector over the elementary homogeneous
symmetric polynomials is obtained by the subset-XOR transform, which is an
involution over GF(2).

Truth tables expand a function to all 2^n points (x_1 is the lowest bit of
the point index) and are capped at TRUTH_TABLE_LIMIT variables; weights use
exact arbitrary-precision binomials so large n stays exact.
"""

from __future__ import annotations

import math

from .gf2 import BitVec

__all__ = [
    "TRUTH_TABLE_LIMIT",
    "CapacityError",
    "SymFn",
    "SanfVec",
    "TruthTable",
    "svv_to_sanf",
    "sanf_to_svv",
    "degree",
    "majority",
    "reverse_complement_input",
    "to_truth_table",
    "hamming_weight",
    "weight_support",
    "pb_truth_table",
]

TRUTH_TABLE_LIMIT = 16


class CapacityError(Exception):
    """Raised when an exact computation would exceed the configured size cap."""


class SymFn:
    """Symmetric Boolean function on n variables, stored as its value-per-
    weight vector of length n+1."""

    __slots__ = ("n", "svv")

    def __init__(self, n: int, svv: BitVec):
        if n < 1:
            raise ValueError("n must be at least 1")
        if svv.length != n + 1:
            raise ValueError("value vector must have length n+1")
        self.n = n
        self.svv = svv

    @classmethod
    def from_string(cls, s: str) -> "SymFn":
        """Parse an SVV bitstring, leftmost character = value at weight 0."""
        vec = BitVec.from_string(s)
        return cls(vec.length - 1, vec)

    @classmethod
    def from_values(cls, values) -> "SymFn":
        vals = list(values)
        return cls(len(vals) - 1, BitVec.from_indices(len(vals), [i for i, v in enumerate(vals) if v]))

    def value(self, i: int) -> int:
        """Function value on inputs of weight i."""
        return self.svv.bit(i)

    def to_string(self) -> str:
        return self.svv.to01()

    def complement(self) -> "SymFn":
        return SymFn(self.n, self.svv.complement())

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFn):
            return self.n == other.n and self.svv == other.svv
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.svv))

    def __repr__(self) -> str:
        return f"SymFn({self.n}, {self.to_string()})"


class SanfVec:
    """Coefficient vector over the homogeneous symmetric polynomials: bit i
    is the coefficient of the degree-i basis polynomial."""

    __slots__ = ("n", "lam")

    def __init__(self, n: int, lam: BitVec):
        if n < 1:
            raise ValueError("n must be at least 1")
        if lam.length != n + 1:
            raise ValueError("coefficient vector must have length n+1")
        self.n = n
        self.lam = lam

    @classmethod
    def from_string(cls, s: str) -> "SanfVec":
        vec = BitVec.from_string(s)
        return cls(vec.length - 1, vec)

    def coeff(self, i: int) -> int:
        return self.lam.bit(i)

    def to_string(self) -> str:
        return self.lam.to01()

    def __eq__(self, other) -> bool:
        if isinstance(other, SanfVec):
            return self.n == other.n and self.lam == other.lam
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.lam))

    def __repr__(self) -> str:
        return f"SanfVec({self.n}, {self.to_string()})"


class TruthTable:
    """Boolean function on n <= TRUTH_TABLE_LIMIT variables as a 2^n-bit
    table; bit x is the value at the point whose i-th variable is bit i-1
    of x."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: BitVec):
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n > TRUTH_TABLE_LIMIT:
            raise CapacityError(f"truth tables are capped at n = {TRUTH_TABLE_LIMIT}")
        if bits.length != 1 << n:
            raise ValueError("table must have length 2^n")
        self.n = n
        self.bits = bits

    def value(self, x: int) -> int:
        return self.bits.bit(x)

    def support(self) -> list[int]:
        """Points where the function is 1, ascending."""
        return self.bits.indices()

    def weight(self) -> int:
        return self.bits.popcount()

    def weight_support(self) -> set[int]:
        """Input weights at which the function takes the value 1 somewhere."""
        return {x.bit_count() for x in self.support()}

    def complement(self) -> "TruthTable":
        return TruthTable(self.n, self.bits.complement())

    def __eq__(self, other) -> bool:
        if isinstance(other, TruthTable):
            return self.n == other.n and self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, weight={self.weight()})"


def _subset_xor(values: list[int]) -> list[int]:
    """Subset-XOR (zeta/Moebius mod 2) transform, padded to a power of two.

    out[i] = XOR of values[j] over binary submasks j of i.  Self-inverse.
    """
    size = 1
    while size < len(values):
        size <<= 1
    out = list(values) + [0] * (size - len(values))
    step = 1
    while step < size:
        for x in range(size):
            if x & step:
                out[x] ^= out[x ^ step]
        step <<= 1
    return out[: len(values)]


def svv_to_sanf(f: SymFn) -> SanfVec:
    """Coefficients from values: coeff(i) = XOR of value(j) over submasks j of i."""
    vals = [f.value(i) for i in range(f.n + 1)]
    lam = _subset_xor(vals)
    return SanfVec(f.n, BitVec.from_indices(f.n + 1, [i for i, v in enumerate(lam) if v]))


def sanf_to_svv(l: SanfVec) -> SymFn:
    """Values from coefficients; inverse of svv_to_sanf (same transform)."""
    coeffs = [l.coeff(i) for i in range(l.n + 1)]
    vals = _subset_xor(coeffs)
    return SymFn(l.n, BitVec.from_indices(l.n + 1, [i for i, v in enumerate(vals) if v]))


def degree(f: SymFn) -> int:
    """Algebraic degree: highest nonzero coefficient index; 0 for the zero
    function by convention."""
    lam = svv_to_sanf(f).lam
    return max(lam.indices(), default=0)


def majority(n: int) -> SymFn:
    """Threshold function that is 1 exactly on inputs of weight > n/2."""
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    k = n // 2
    return SymFn.from_values([1 if i > k else 0 for i in range(n + 1)])


def reverse_complement_input(f: SymFn) -> SymFn:
    """The function x -> f(x + 11...1); its value vector is f's reversed."""
    return SymFn(f.n, BitVec.from_string(f.to_string()[::-1]))


def to_truth_table(f: SymFn) -> TruthTable:
    """Expand to all 2^n points via the weight of each point."""
    if f.n > TRUTH_TABLE_LIMIT:
        raise CapacityError(f"truth tables are capped at n = {TRUTH_TABLE_LIMIT}")
    svv_bits = f.svv.bits
    bits = 0
    for x in range(1 << f.n):
        if (svv_bits >> x.bit_count()) & 1:
            bits |= 1 << x
    return TruthTable(f.n, BitVec(1 << f.n, bits))


def hamming_weight(f: SymFn) -> int:
    """Exact number of points where f is 1: the sum of C(n, i) over the set
    positions of the value vector."""
    return sum(math.comb(f.n, i) for i in f.svv.indices())


def weight_support(f: SymFn) -> set[int]:
    """Input weights on which f takes the value 1."""
    return set(f.svv.indices())


def pb_truth_table(b: int) -> TruthTable:
    """Truth table on 2b variables of the product of the b pairwise XORs
    (x1+x2)(x3+x4)...; degree b, and every support point has weight b."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    if 2 * b > TRUTH_TABLE_LIMIT:
        raise CapacityError(f"truth tables are capped at n = {TRUTH_TABLE_LIMIT}")
    if b == 0:
        return TruthTable(0, BitVec(1, 1))
    n = 2 * b
    bits = 0
    for x in range(1 << n):
        prod = 1
        for i in range(b):
            if ((x >> (2 * i)) ^ (x >> (2 * i + 1))) & 1 == 0:
                prod = 0
                break
        if prod:
            bits |= 1 << x
    return TruthTable(n, BitVec(1 << n, bits))
