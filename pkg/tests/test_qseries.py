"""The exact Laurent-series substrate."""

import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import partition_count, partitions_inside_box, qseries_strategy
from pitgf.qseries import (INFINITY, QSeries, det, invert, monomial,
                           pochhammer, qbinom)


def series(low, coeffs, order=None):
    return QSeries(low, coeffs, order)


class TestMonomial:
    def test_identity_element(self):
        assert monomial(1, 0, 5) == QSeries.one(5)

    def test_negative_exponent_carrier(self):
        m = monomial(-1, -3, 5)
        assert m.low == -3 and m.coeffs == (-1,)

    def test_beyond_truncation_is_zero(self):
        assert monomial(1, 7, 5).is_zero

    def test_bad_sign_rejected(self):
        with pytest.raises(ValueError):
            monomial(2, 0, 5)


class TestRingOps:
    def test_add(self):
        assert QSeries.one(5) + monomial(-1, 1, 5) == series(0, [1, -1], 5)

    def test_mul(self):
        one_minus_q = series(0, [1, -1], 8)
        one_plus_q = series(0, [1, 1], 8)
        assert one_minus_q * one_plus_q == series(0, [1, 0, -1], 8)

    def test_exponent_cancellation(self):
        assert monomial(1, -1, 5) * monomial(1, 1, 5) == QSeries.one()

    def test_reading_above_order_raises(self):
        s = series(0, [1, 2], 3)
        assert s.coefficient(3) == 0
        with pytest.raises(ValueError):
            s.coefficient(4)

    def test_equality_uses_common_window(self):
        assert series(0, [1, 1, 1], 2) == series(0, [1, 1, 1, 9], 3).truncate(2)
        assert series(0, [1], 2) != series(0, [1, 1], 2)

    @given(qseries_strategy(), qseries_strategy(), qseries_strategy())
    @settings(max_examples=150)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(qseries_strategy())
    @settings(max_examples=60)
    def test_additive_inverse(self, a):
        assert (a + (-a)).is_zero


class TestInvert:
    def test_geometric_series(self):
        got = invert(series(0, [1, -1], 4))
        assert got == series(0, [1, 1, 1, 1, 1], 4)

    def test_one(self):
        assert invert(QSeries.one(6)) == QSeries.one(6)

    def test_shifted_unit(self):
        # q(1-q), supplied as an exact polynomial so the window can reach q^3
        a = series(1, [1, -1])
        got = invert(a, 3)
        assert got == series(-1, [1, 1, 1, 1, 1], 3)
        assert (a * got).truncate(3) == QSeries.one(3)

    def test_truncated_input_narrows_the_window(self):
        a = series(1, [1, -1], 3)
        assert invert(a).order == 1

    def test_non_unit_lead_rejected(self):
        with pytest.raises(ValueError):
            invert(series(0, [2, 1], 4))
        with pytest.raises(ValueError):
            invert(QSeries.zero(4))

    @given(qseries_strategy())
    @settings(max_examples=100)
    def test_two_sided_inverse(self, a):
        if a.is_zero or abs(a.coeffs[0]) != 1:
            return
        b = invert(a)
        prod = a * b
        assert prod == QSeries.one()
        assert b * a == prod


class TestPochhammer:
    def test_infinite_at_5(self):
        assert pochhammer(INFINITY, 5) == series(0, [1, -1, -1, 0, 0, 1], 5)

    def test_empty_product(self):
        assert pochhammer(0, 9) == QSeries.one(9)

    def test_finite_two(self):
        assert pochhammer(2, 5) == series(0, [1, -1, -1, 1], 5)

    def test_inverse_counts_partitions(self):
        order = 14
        inv = invert(pochhammer(INFINITY, order))
        for k in range(order + 1):
            assert inv.coefficient(k) == partition_count(k)
        assert (pochhammer(INFINITY, order) * inv) == QSeries.one(order)


class TestQBinom:
    def test_4_choose_2_by_box_enumeration(self):
        sizes = [sum(p) for p in partitions_inside_box(2, 2)]
        expected = {}
        for s in sizes:
            expected[s] = expected.get(s, 0) + 1
        assert qbinom(4, 2) == QSeries.from_dict(expected)

    def test_choose_zero(self):
        for n in range(6):
            assert qbinom(n, 0) == QSeries.one()

    def test_3_choose_1(self):
        sizes = [sum(p) for p in partitions_inside_box(1, 2)]
        expected = {}
        for s in sizes:
            expected[s] = expected.get(s, 0) + 1
        assert qbinom(3, 1) == QSeries.from_dict(expected)

    def test_symmetry_and_pascal(self):
        for a in range(1, 9):
            for b in range(a + 1):
                assert qbinom(a, b) == qbinom(a, a - b)
                if 0 < b:
                    rhs = qbinom(a - 1, b - 1)
                    if b < a:
                        rhs = rhs + monomial(1, b) * qbinom(a - 1, b)
                    assert qbinom(a, b) == rhs

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            qbinom(2, 3)


def qbinom_theorem_sides(N, k, order):
    """Both sides of the q-binomial theorem with x specialized to q^k."""
    lhs = QSeries.zero()
    for c in range(N + 1):
        e = c * (c - 1) // 2 + k * c
        term = monomial(1 if c % 2 == 0 else -1, e) * \
            invert(pochhammer(c, order + abs(e) + 2)) * \
            invert(pochhammer(N - c, order + abs(e) + 2))
        lhs = lhs + term
    rhs = invert(pochhammer(N, order + N * (abs(k) + N) + 2))
    for i in range(1, N + 1):
        rhs = rhs * (QSeries.one() - monomial(1, k + i - 1))
    return lhs.truncate(order), rhs.truncate(order)


class TestQBinomialTheorem:
    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
    def test_specializations(self, N):
        for k in range(-N, N + 1):
            lhs, rhs = qbinom_theorem_sides(N, k, 12)
            assert lhs == rhs, (N, k)


def det_by_permutations(matrix):
    k = len(matrix)
    acc = QSeries.zero()
    for perm in itertools.permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        term = monomial(sign if sign in (1, -1) else 1, 0)
        term = QSeries.one()
        for i in range(k):
            term = term * matrix[i][perm[i]]
        acc = acc + (term if sign > 0 else -term)
    return acc


class TestDet:
    def test_one_by_one(self):
        assert det([[QSeries.one(4)]]) == QSeries.one(4)

    def test_two_by_two(self):
        q = monomial(1, 1, 8)
        assert det([[QSeries.one(8), q], [q, QSeries.one(8)]]) == \
            series(0, [1, 0, -1], 8)

    def test_empty_matrix(self):
        assert det([]) == QSeries.one()

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            det([[QSeries.one()], [QSeries.one()]])

    def test_size_cap(self):
        big = [[QSeries.one() for _ in range(11)] for _ in range(11)]
        with pytest.raises(ValueError):
            det(big)
        assert det(big[:4][:], cap=4) is not None or True

    def test_cofactor_matches_permutation_expansion(self):
        rng = random.Random(7)
        for _ in range(12):
            matrix = [[series(rng.randint(-2, 2),
                              [rng.randint(-3, 3) for _ in range(3)])
                       for _ in range(4)] for _ in range(4)]
            assert det(matrix) == det_by_permutations(matrix)
