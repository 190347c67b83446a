from collections import Counter

import pytest
from hypothesis import given

from conftest import partitions
from novertex.partitions import (
    EMPTY,
    Partition,
    cell_stats,
    conjugate,
    enumerate_partitions,
    frobenius,
    hooks,
    is_horizontal_strip,
    is_vertical_strip,
    kappa,
    n_stat,
    norm_sq,
    partitions_up_to,
    stats,
    sub_partitions,
    tuples_up_to,
)

P = Partition.of


class TestConjugate:
    def test_worked_example(self):
        assert conjugate(P(5, 4, 3, 1)) == P(4, 3, 3, 2, 1)

    def test_empty(self):
        assert conjugate(EMPTY) == EMPTY

    def test_hook_shape(self):
        assert conjugate(P(3, 1)) == P(2, 1, 1)

    @given(partitions())
    def test_involution(self, lam):
        assert lam.conjugate.conjugate == lam

    @given(partitions())
    def test_size_and_length(self, lam):
        assert lam.conjugate.size == lam.size
        if lam:
            assert len(lam.conjugate) == lam.row(1)


def test_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_rows_beyond_the_diagram_are_zero():
    lam = P(3, 1)
    assert lam.row(5) == 0 and lam.col(7) == 0


class TestCellStats:
    def test_two_one(self):
        assert cell_stats(P(2, 1)).hook == {(1, 1): 3, (1, 2): 1, (2, 1): 1}

    def test_single_box(self):
        cs = cell_stats(P(1))
        assert (cs.hook, cs.arm, cs.leg, cs.content) == ({(1, 1): 1}, {(1, 1): 0}, {(1, 1): 0}, {(1, 1): 0})

    def test_hook_multiset_5431(self):
        expected = Counter([8, 6, 5, 3, 1, 6, 4, 3, 1, 4, 2, 1, 1])
        assert Counter(hooks(P(5, 4, 3, 1))) == expected

    @given(partitions())
    def test_hook_is_arm_plus_leg_plus_one(self, lam):
        cs = cell_stats(lam)
        for c in lam.cells():
            assert cs.hook[c] == cs.arm[c] + cs.leg[c] + 1

    @given(partitions())
    def test_conjugate_has_same_hooks(self, lam):
        assert Counter(hooks(lam)) == Counter(hooks(lam.conjugate))


class TestStats:
    def test_self_conjugate_has_zero_kappa(self):
        assert kappa(P(2, 1)) == 0

    def test_one_row_and_one_column(self):
        assert kappa(P(2)) == 2
        assert kappa(P(1, 1)) == -2

    def test_n_of_5431(self):
        lam = P(5, 4, 3, 1)
        assert n_stat(lam) == 13
        assert sum(c * (c - 1) // 2 for c in lam.conjugate.parts) == 13

    def test_tuple_shape(self):
        assert stats(P(2, 1)) == (3, 0, 5, 1)

    @given(partitions())
    def test_kappa_is_difference_of_norms(self, lam):
        assert kappa(lam) == norm_sq(lam) - norm_sq(lam.conjugate)
        assert kappa(lam.conjugate) == -kappa(lam)

    @given(partitions())
    def test_n_from_column_norm(self, lam):
        assert 2 * n_stat(lam) == norm_sq(lam.conjugate) - lam.size
        assert 2 * n_stat(lam.conjugate) == norm_sq(lam) - lam.size


class TestFrobenius:
    def test_5431(self):
        assert frobenius(P(5, 4, 3, 1)) == (3, (4, 2, 0), (3, 1, 0))

    def test_empty(self):
        assert frobenius(EMPTY).r == 0

    def test_single_box(self):
        assert frobenius(P(1)) == (1, (0,), (0,))

    @given(partitions())
    def test_size_from_coordinates(self, lam):
        r, m, n = frobenius(lam)
        assert lam.size == sum(m) + sum(n) + r
        assert list(m) == sorted(set(m), reverse=True)


class TestEnumerate:
    def test_counts(self):
        assert enumerate_partitions(0) == (EMPTY,)
        assert len(enumerate_partitions(4)) == 5
        assert len(enumerate_partitions(8)) == 22

    def test_reverse_lexicographic(self):
        assert enumerate_partitions(4) == (P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1))

    def test_generating_function(self):
        # coefficients of Π(1-x^n)^{-1} through x^8, by the pentagonal recurrence
        p = [1]
        for n in range(1, 9):
            total, k = 0, 1
            while (g := k * (3 * k - 1) // 2) <= n:
                sign = 1 if k % 2 else -1
                total += sign * p[n - g]
                if (g2 := k * (3 * k + 1) // 2) <= n:
                    total += sign * p[n - g2]
                k += 1
            p.append(total)
        assert [len(enumerate_partitions(d)) for d in range(9)] == p

    @pytest.mark.parametrize("d", range(9))
    def test_distinct_and_sized(self, d):
        parts = enumerate_partitions(d)
        assert len(set(parts)) == len(parts)
        assert all(lam.size == d for lam in parts)


def test_total_order_is_size_then_reverse_lex():
    assert sorted(partitions_up_to(3)) == [EMPTY, P(1), P(2), P(1, 1), P(3), P(2, 1), P(1, 1, 1)]


def test_sub_partitions_of_two_one():
    assert set(sub_partitions(P(2, 1))) == {EMPTY, P(1), P(2), P(1, 1), P(2, 1)}


def test_tuples_respect_total():
    tuples = list(tuples_up_to(2, 2))
    assert len(tuples) == 1 + 2 * 1 + (2 * 2 + 1)
    assert all(sum(p.size for p in t) <= 2 for t in tuples)


def test_strips():
    assert is_horizontal_strip(P(3, 1), P(1))
    assert is_horizontal_strip(P(2, 2), P(2))
    assert not is_horizontal_strip(P(2, 2), P(1))
    assert is_vertical_strip(P(2, 1, 1), P(2))
    assert not is_vertical_strip(P(2, 2), P(2))
    assert not is_vertical_strip(P(3), P(1))
