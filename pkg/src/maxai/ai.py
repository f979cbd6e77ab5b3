"""Algebraic immunity: brute-force annihilator oracle and structural checks.

The oracle follows the definition directly: for rising degree d it asks
whether some nonzero combination of the monomials of degree <= d vanishes
on the support of f (annihilator of f) or of f+1.  Monomial evaluation
vectors over the support are fed one by one, in (degree, index-set) order,
into an incremental XOR echelon basis; the first vector that reduces to
zero yields both the minimum degree and an explicit annihilator.  The
elimination runs over 64-bit packed words in jitted kernels, since support
sizes reach 2^16.

The symmetric-only rank test and the necessary-condition checkers live
here too; they operate on value vectors alone and stay cheap at large n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np
from numba import njit

from .gf2 import BitMatrix, BitVec, epsilon, kernel_basis
from .orders import bset, partition, prefix_predecessors
from .symfun import CapacityError, SymFn, TruthTable, TRUTH_TABLE_LIMIT

__all__ = [
    "AiReport",
    "ConditionVerdict",
    "ai_exact",
    "sym_annihilator_exists",
    "check_necessary",
    "alternation_constraints",
]


@dataclass(frozen=True)
class AiReport:
    """Outcome of the exact oracle.

    ``witness_monomials`` lists the variable-index masks of an annihilator g
    of the reported side with deg(g) == ai (mask 0 is the constant 1).
    """

    ai: int
    witness_side: str  # "f" or "complement"
    witness_monomials: tuple[int, ...]


@dataclass(frozen=True)
class ConditionVerdict:
    """Necessary structural conditions, evaluated in a fixed order with
    short-circuit on the first failure (later fields stay True).

    weight_bound     -- the value vector has weight n/2 or n/2 + 1
    cell_alternation -- on every cell, non-exempt positions below the center
                        share one value and their mirrors carry the other
    fixed_pair_limit -- at most one exempt position agrees with its mirror
    center_triple    -- no exempt position t has v(t) == v(k) == v(2k-t)
    """

    weight_bound: bool = True
    cell_alternation: bool = True
    fixed_pair_limit: bool = True
    center_triple: bool = True
    failing_witness: tuple[int, ...] | None = None

    @property
    def all_passed(self) -> bool:
        return (
            self.weight_bound
            and self.cell_alternation
            and self.fixed_pair_limit
            and self.center_triple
        )


@njit(cache=True)
def _insert_monomials(supp, masks, basis, combos, pivot_row, rank, col_base, witness):
    """Insert monomial evaluation vectors over the support into an XOR basis.

    Each basis row keeps its lowest set bit as pivot; rows are never
    rewritten, so reduction of an incoming vector only walks its own set
    bits.  Returns (rank, i) where i is the index in ``masks`` of the first
    vector that reduced to zero (-1 if none); on success ``witness`` holds
    the combination over global column indices.
    """
    W = basis.shape[1]
    Wc = combos.shape[1]
    n_pts = supp.shape[0]
    vbuf = np.zeros(W, dtype=np.int64)
    cbuf = np.zeros(Wc, dtype=np.int64)
    for mi in range(masks.shape[0]):
        mono = masks[mi]
        for w in range(W):
            vbuf[w] = 0
        for t in range(n_pts):
            if supp[t] & mono == mono:
                vbuf[t >> 6] ^= np.int64(1) << (t & 63)
        col = col_base + mi
        cw = (col >> 6) + 1
        for w in range(cw):
            cbuf[w] = 0
        cbuf[col >> 6] = np.int64(1) << (col & 63)
        w0 = 0
        while True:
            b = -1
            for w in range(w0, W):
                if vbuf[w] != 0:
                    x = vbuf[w]
                    t = 0
                    while (x >> t) & 1 == 0:
                        t += 1
                    b = (w << 6) + t
                    w0 = w
                    break
            if b < 0:
                for w in range(Wc):
                    witness[w] = cbuf[w] if w < cw else 0
                return rank, mi
            r = pivot_row[b]
            if r < 0:
                for w in range(w0, W):
                    basis[rank, w] = vbuf[w]
                for w in range(cw):
                    combos[rank, w] = cbuf[w]
                pivot_row[b] = rank
                rank += 1
                break
            for w in range(w0, W):
                vbuf[w] ^= basis[r, w]
            for w in range(cw):
                cbuf[w] ^= combos[r, w]
    return rank, -1


@lru_cache(maxsize=None)
def _monomials_by_degree(n: int) -> tuple[np.ndarray, ...]:
    """Variable-index masks grouped by degree, each group sorted ascending."""
    groups = []
    for d in range(n + 1):
        masks = sorted(sum(1 << i for i in c) for c in combinations(range(n), d))
        groups.append(np.array(masks, dtype=np.int64))
    return tuple(groups)


class _SideSearch:
    """Incremental annihilator search for one side (a fixed support set)."""

    def __init__(self, points: np.ndarray, total_cols: int):
        n_pts = len(points)
        self.supp = points
        words = max(1, (n_pts + 63) >> 6)
        self.wc = max(1, (total_cols + 63) >> 6)
        cap = max(1, min(n_pts, total_cols))
        self.basis = np.zeros((cap, words), dtype=np.int64)
        self.combos = np.zeros((cap, self.wc), dtype=np.int64)
        self.pivot_row = np.full(max(1, n_pts), -1, dtype=np.int64)
        self.witness = np.zeros(self.wc, dtype=np.int64)
        self.rank = 0
        self.cols = 0

    def insert(self, masks: np.ndarray) -> int:
        """Insert one degree layer; local index of the first dependent
        monomial, or -1 when all were independent."""
        rank, idx = _insert_monomials(
            self.supp, masks, self.basis, self.combos,
            self.pivot_row, self.rank, self.cols, self.witness,
        )
        self.rank = int(rank)
        self.cols += len(masks)
        return int(idx)

    def witness_columns(self) -> list[int]:
        val = 0
        for wi in range(self.wc):
            val |= (int(self.witness[wi]) & 0xFFFFFFFFFFFFFFFF) << (64 * wi)
        return BitVec(64 * self.wc, val).indices()


def _support_points(table: TruthTable) -> tuple[np.ndarray, np.ndarray]:
    """Support of f and of f+1 as int64 point arrays."""
    n_bytes = max(1, (1 << table.n) >> 3)
    raw = table.bits.bits.to_bytes(n_bytes, "little")
    flat = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    flat = flat[: 1 << table.n]
    ones = np.nonzero(flat)[0].astype(np.int64)
    zeros = np.nonzero(1 - flat)[0].astype(np.int64)
    return ones, zeros


def ai_exact(t: TruthTable) -> AiReport:
    """Minimum degree of a nonzero annihilator of f or f+1.

    Degrees are searched upward; at each degree the f side is tried first,
    so on a tie the reported side is "f".  Constants get degree 0 (the
    constant 1 annihilates the zero side).
    """
    n = t.n
    if n > TRUTH_TABLE_LIMIT:
        raise CapacityError(f"oracle is capped at n = {TRUTH_TABLE_LIMIT}")
    supp_f, supp_g = _support_points(t)
    if len(supp_f) == 0:
        return AiReport(0, "f", (0,))
    if len(supp_g) == 0:
        return AiReport(0, "complement", (0,))
    groups = _monomials_by_degree(n)
    max_d = (n + 1) // 2
    total_cols = sum(len(groups[d]) for d in range(max_d + 1))
    col_masks = np.concatenate(groups[: max_d + 1])
    sides = (("f", _SideSearch(supp_f, total_cols)),
             ("complement", _SideSearch(supp_g, total_cols)))
    for d in range(max_d + 1):
        for name, search in sides:
            if search.insert(groups[d]) >= 0:
                monos = tuple(int(col_masks[c]) for c in search.witness_columns())
                return AiReport(d, name, monos)
    raise AssertionError("annihilator must exist by degree ceil(n/2)")


def sym_annihilator_exists(f: SymFn, d: int, side: str = "f") -> bool:
    """Whether a nonzero *symmetric* annihilator of degree < d exists for
    the chosen side.

    The rows are the submask-indicator vectors of the positions where that
    side's value vector is 1, truncated to the first d coordinates; a
    nonzero kernel vector is the coefficient vector of such an annihilator.
    """
    if side not in ("f", "complement"):
        raise ValueError("side must be 'f' or 'complement'")
    if not 1 <= d <= f.n // 2:
        raise ValueError("d must satisfy 1 <= d <= n/2")
    k = f.n // 2
    want = 1 if side == "f" else 0
    trunc = (1 << d) - 1
    rows = [
        BitVec(d, epsilon(i, k).bits & trunc)
        for i in range(f.n + 1)
        if f.value(i) == want
    ]
    return bool(kernel_basis(BitMatrix(rows, d)))


def check_necessary(f: SymFn) -> ConditionVerdict:
    """Evaluate the necessary structural conditions for maximum immunity,
    in order, stopping at the first failure."""
    n = f.n
    if n % 2:
        raise ValueError("even n required")
    k = n // 2
    v = [f.value(i) for i in range(n + 1)]

    if sum(v) not in (k, k + 1):
        return ConditionVerdict(weight_bound=False)

    fam = partition(k)
    exempt = set(bset(k))
    for p in range(1, len(fam.sets)):
        below = [x for x in fam.sets[p] if x < k and x not in exempt]
        if not below:
            continue
        a = v[below[0]]
        for x in below[1:]:
            if v[x] != a:
                return ConditionVerdict(cell_alternation=False,
                                        failing_witness=(below[0], x))
        for x in below:
            if v[n - x] != a ^ 1:
                return ConditionVerdict(cell_alternation=False,
                                        failing_witness=(x, n - x))

    preds = prefix_predecessors(k)
    fixed = [t for t in preds if v[t] == v[n - t]]
    if len(fixed) > 1:
        return ConditionVerdict(fixed_pair_limit=False,
                                failing_witness=(fixed[0], fixed[1]))

    for t in preds:
        if v[t] == v[k] == v[n - t]:
            return ConditionVerdict(center_triple=False,
                                    failing_witness=(t, k, n - t))

    return ConditionVerdict()


def alternation_constraints(n: int) -> list[tuple[int, int, int, tuple[int, ...]]]:
    """Forced-alternation index sets, one per decomposition n = 2^(p+1)*mu + 2m
    with p, mu >= 1 and 0 <= m < 2^p.

    Each entry is (p, mu, m, positions); the positions are k -+ odd steps of
    2^(p-1) shifted by the decomposition, and they exhaust the non-exempt
    part of cell A_p.
    """
    if n < 4 or n % 2:
        raise ValueError("even n >= 4 required")
    k = n // 2
    out = []
    for p in range(1, k.bit_length()):
        mu = k >> p
        if mu < 1:
            break
        m = k & ((1 << p) - 1)
        half = 1 << (p - 1)
        idx = set()
        for i in range(1, mu + 1):
            idx.add(k - (i << p) + half)
            idx.add(k + (i << p) - half)
        out.append((p, mu, m, tuple(sorted(idx))))
    return out
