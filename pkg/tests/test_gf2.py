import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxai.gf2 import BitMatrix, BitVec, epsilon, kernel_basis, rank, sum_epsilon_over
from maxai.orders import partition


def lucas_ref(j: int, i: int) -> bool:
    """Independent submask-order oracle: C(i, j) is odd."""
    return math.comb(i, j) % 2 == 1


class TestBitVec:
    def test_construction_and_invariant(self):
        v = BitVec(5, 0b10110)
        assert len(v) == 5
        assert v.to01() == "01101"
        assert v.popcount() == 3
        assert v.indices() == [1, 2, 4]
        with pytest.raises(ValueError):
            BitVec(3, 0b1000)  # high bit outside length
        with pytest.raises(ValueError):
            BitVec(-1)

    def test_string_round_trip(self):
        s = "0110001011"
        assert BitVec.from_string(s).to01() == s
        with pytest.raises(ValueError):
            BitVec.from_string("01x0")

    def test_xor_and_complement(self):
        a = BitVec.from_string("0110")
        b = BitVec.from_string("0011")
        assert (a ^ b).to01() == "0101"
        assert a.complement().to01() == "1001"
        with pytest.raises(ValueError):
            a ^ BitVec(3)

    def test_from_indices(self):
        assert BitVec.from_indices(4, [0, 3]).to01() == "1001"
        with pytest.raises(ValueError):
            BitVec.from_indices(4, [4])

    def test_hash_eq(self):
        assert BitVec(4, 5) == BitVec(4, 5)
        assert BitVec(4, 5) != BitVec(5, 5)
        assert len({BitVec(4, 5), BitVec(4, 5)}) == 1


class TestEpsilon:
    def test_lowest_index(self):
        assert epsilon(0, 7).indices() == [0]

    def test_full_mask(self):
        assert epsilon(7, 7).indices() == list(range(7))

    def test_above_k(self):
        assert epsilon(8, 7).indices() == [0]

    def test_against_binomial_oracle(self):
        for k in (3, 5, 7, 8, 12):
            for i in range(2 * k + 1):
                want = [j for j in range(k) if lucas_ref(j, i)]
                assert epsilon(i, k).indices() == want

    def test_range_errors(self):
        with pytest.raises(ValueError):
            epsilon(15, 7)
        with pytest.raises(ValueError):
            epsilon(-1, 7)
        with pytest.raises(ValueError):
            epsilon(0, 0)


class TestRankKernel:
    def test_rank_identity(self):
        assert rank(BitMatrix.identity(4)) == 4

    def test_rank_zero(self):
        assert rank(BitMatrix.zeros(3, 5)) == 0

    def test_rank_upper_epsilon_basis(self):
        m = BitMatrix([epsilon(i, 7) for i in range(8, 15)])
        assert rank(m) == 7

    def test_kernel_identity_empty(self):
        for k in (1, 3, 6):
            assert kernel_basis(BitMatrix.identity(k)) == []

    def test_kernel_zero_row(self):
        basis = kernel_basis(BitMatrix.zeros(1, 3))
        assert basis == [BitVec(3, 1), BitVec(3, 2), BitVec(3, 4)]

    def test_kernel_lower_epsilon_basis_empty(self):
        assert kernel_basis(BitMatrix([epsilon(i, 7) for i in range(7)])) == []

    def test_kernel_vectors_annihilate(self):
        rows = [BitVec(6, b) for b in (0b110010, 0b011001, 0b101011, 0b110010)]
        m = BitMatrix(rows)
        basis = kernel_basis(m)
        assert len(basis) == 6 - rank(m)
        for x in basis:
            assert all((r.bits & x.bits).bit_count() % 2 == 0 for r in rows)

    @settings(deadline=None, max_examples=60)
    @given(st.integers(1, 10), st.lists(st.integers(0, 2**10 - 1), max_size=12))
    def test_rank_nullity(self, cols, raw_rows):
        rows = [BitVec(cols, b & ((1 << cols) - 1)) for b in raw_rows]
        m = BitMatrix(rows, cols)
        assert rank(m) + len(kernel_basis(m)) == cols

    def test_matrix_validation(self):
        with pytest.raises(ValueError):
            BitMatrix([])
        with pytest.raises(ValueError):
            BitMatrix([BitVec(3), BitVec(4)])


class TestEpsilonBases:
    def test_two_pure_bases(self):
        # both {eps_0..eps_{k-1}} and {eps_{k+1}..eps_{2k}} span F_2^k
        for k in range(1, 49):
            assert rank(BitMatrix([epsilon(i, k) for i in range(k)], k)) == k
            assert rank(BitMatrix([epsilon(i, k) for i in range(k + 1, 2 * k + 1)], k)) == k

    def test_mixed_cell_bases(self):
        # picking each cell's rows from below or above k still gives a basis
        for k in range(1, 21):
            fam = partition(k)
            m = k.bit_length() - 1
            lows = [[epsilon(j, k) for j in fam.sets[i + 1] if j <= k - 1] for i in range(m + 1)]
            highs = [[epsilon(j, k) for j in fam.sets[i + 1] if k + 1 <= j] for i in range(m + 1)]
            for picks in product((0, 1), repeat=m + 1):
                rows = []
                for i, pick in enumerate(picks):
                    rows.extend(highs[i] if pick else lows[i])
                assert len(rows) == k
                assert rank(BitMatrix(rows, k)) == k


class TestEpsilonSums:
    def test_empty_sum(self):
        assert sum_epsilon_over([], 7) == BitVec(7)

    def test_strict_submasks_give_center(self):
        below = [j for j in range(7) if j & 7 == j]
        assert sum_epsilon_over(below, 7, reflect=False) == epsilon(7, 7)
        assert sum_epsilon_over(below, 7, reflect=True) == epsilon(7, 7)

    def test_range_error(self):
        with pytest.raises(ValueError):
            sum_epsilon_over([15], 7)

    def test_cell_reflection_identity(self):
        # summing eps_j over {j in A_p : j submask of k} is reflection-invariant
        for k in range(1, 65):
            fam = partition(k)
            for p in range(len(fam.sets)):
                sel = [j for j in fam.sets[p] if j & k == j]
                assert sum_epsilon_over(sel, k, False) == sum_epsilon_over(sel, k, True)

    def test_center_decompositions(self):
        for k in range(1, 65):
            strict = [j for j in range(k) if j & k == j]
            assert sum_epsilon_over(strict, k, False) == epsilon(k, k)
            assert sum_epsilon_over(strict, k, True) == epsilon(k, k)
