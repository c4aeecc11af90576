import json
import random

import pytest

from boxquot.series import (FinitePoly, TruncSeries, is_palindromic, macmahon,
                            reciprocal_poly)


def conv(a, b):
    """Direct convolution of two coefficient lists (independent oracle)."""
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b))
            for k in range(n)]


def plane_partition_count(n):
    """Count plane partitions of n by brute-force enumeration of weakly
    decreasing positive-integer matrices, row by row."""
    from functools import lru_cache

    def gen_rows(prev, m):
        # nonempty weakly decreasing rows, entrywise <= prev, sum <= m
        out = []

        def extend(row, i, remaining):
            if row:
                out.append(tuple(row))
            if i >= len(prev) or remaining == 0:
                return
            hi = min(prev[i], row[-1] if row else remaining, remaining)
            for v in range(1, hi + 1):
                row.append(v)
                extend(row, i + 1, remaining - v)
                row.pop()

        extend([], 0, m)
        return out

    @lru_cache(maxsize=None)
    def fill(prev, m):
        if m == 0:
            return 1
        return sum(fill(row, m - sum(row)) for row in gen_rows(prev, m))

    if n == 0:
        return 1
    return fill((n,) * n, n)


class TestMacmahon:
    def test_power_one_order_six(self):
        # two independent oracles: product-formula term expansion is the
        # implementation itself; plane partitions counted by brute force
        series = macmahon(6, 1)
        expected = [plane_partition_count(n) for n in range(7)]
        assert expected == [1, 1, 3, 6, 13, 24, 48]
        assert series.coeff_list() == expected

    def test_power_two_is_square(self):
        base = macmahon(4, 1).coeff_list()
        assert macmahon(4, 2).coeff_list() == conv(base, base)
        assert macmahon(4, 2).coeff_list() == [1, 2, 7, 18, 47]

    def test_order_zero(self):
        assert macmahon(0, 3).coeff_list() == [1]

    def test_power_is_repeated_product(self):
        for r in (1, 2, 3):
            assert macmahon(5, r) == macmahon(5, 1) ** r

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            macmahon(-1, 1)
        with pytest.raises(ValueError):
            macmahon(3, 0)


class TestMul:
    def test_one_plus_q_squared(self):
        a = TruncSeries.from_coeffs([1, 1], order=2)
        assert (a * a).coeff_list() == [1, 2, 1]

    def test_macmahon_times_one_plus_q(self):
        m = macmahon(3, 1)
        b = TruncSeries.from_coeffs([1, 1], order=3)
        assert (m * b).coeff_list() == [1, 2, 4, 9]

    def test_identity(self):
        m = macmahon(4, 2)
        assert m * TruncSeries.one(4) == m

    def test_commutative_associative_random(self):
        rng = random.Random(7)
        for _ in range(50):
            a, b, c = (TruncSeries.from_coeffs(
                [rng.randint(-9, 9) for _ in range(6)], order=5)
                for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_laurent_shift(self):
        a = macmahon(4, 1).shift(-1)
        assert a.min_exp == -1 and a.order == 3
        assert a.coeff(-1) == 1 and a.coeff(0) == 1 and a.coeff(2) == 6


class TestInverse:
    def test_geometric(self):
        a = TruncSeries.from_coeffs([1, -1], order=3)
        assert a.inverse().coeff_list() == [1, 1, 1, 1]

    def test_macmahon_inverse(self):
        assert macmahon(2, 1).inverse().coeff_list() == [1, -1, -2]

    def test_one(self):
        assert TruncSeries.one(3).inverse() == TruncSeries.one(3)

    def test_inverse_multiplies_to_one(self):
        rng = random.Random(11)
        for _ in range(25):
            coeffs = [rng.choice([1, -1])] + [rng.randint(-5, 5) for _ in range(5)]
            a = TruncSeries.from_coeffs(coeffs, order=5)
            assert a * a.inverse() == TruncSeries.one(5)

    def test_non_unit(self):
        with pytest.raises(ValueError, match="not invertible"):
            TruncSeries.from_coeffs([2, 1], order=2).inverse()


class TestCompareAndJson:
    def test_compare_reports_range(self):
        a = macmahon(6, 1)
        b = macmahon(4, 1)
        match, first, rng = a.compare(b)
        assert match and first is None and rng == (0, 4)

    def test_compare_mismatch(self):
        a = TruncSeries.from_coeffs([1, 2, 3], order=2)
        b = TruncSeries.from_coeffs([1, 2, 4], order=2)
        assert a.compare(b) == (False, 2, (0, 2))

    def test_json_round_trip(self):
        a = macmahon(5, 2).shift(-2)
        data = json.loads(json.dumps(a.to_json()))
        assert TruncSeries.from_json(data) == a

    def test_coeff_beyond_order(self):
        with pytest.raises(IndexError):
            macmahon(3, 1).coeff(4)


class TestFinitePoly:
    def test_reciprocal_examples(self):
        assert reciprocal_poly(FinitePoly((1, 1))) == FinitePoly((1, 1))
        assert reciprocal_poly(FinitePoly((2, 3, 0, 5))) == FinitePoly((5, 0, 3, 2))
        assert reciprocal_poly(FinitePoly((7,))) == FinitePoly((7,))

    def test_palindromic(self):
        assert is_palindromic(FinitePoly((1, 1)))
        assert not is_palindromic(FinitePoly((1, 2, 0, 1)))
        assert is_palindromic(FinitePoly(()))

    def test_involution_on_nonzero_constant_term(self):
        rng = random.Random(3)
        for _ in range(50):
            coeffs = [rng.choice([c for c in range(-5, 6) if c])] + \
                     [rng.randint(-5, 5) for _ in range(4)]
            p = FinitePoly(tuple(coeffs))
            assert reciprocal_poly(reciprocal_poly(p)) == p
