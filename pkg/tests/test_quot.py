import itertools
import random

import pytest

from boxquot.modules import (Box, BoxModule, MonomialIdeal, ZERO_MODULE,
                             box_module_of_ideal, direct_sum, matlis_dual)
from boxquot.quot import (box_model_of_ring, colored_quot_series,
                          count_quotients, enumerate_quotients, quot_series)
from boxquot.series import macmahon
from helpers import random_staircase, staircase_module


def brute_force_order_ideals(module, n):
    """Independent oracle: test every n-subset of boxes for downward
    closure under the edge DAG."""
    preds = module.predecessors()
    count = 0
    for sub in itertools.combinations(range(len(module.boxes)), n):
        s = set(sub)
        if all(p in s for i in s for p in preds[i]):
            count += 1
    return count


class TestEnumerate:
    def test_ring_length_two(self):
        module = box_model_of_ring(2)
        points = enumerate_quotients(module, 2)
        assert len(points) == 3
        for pt in points:
            weights = {module.boxes[i].weight for i in pt.support}
            assert (0, 0, 0) in weights

    def test_line_ideal_length_one(self):
        ideal = MonomialIdeal(frozenset({(0, 1, 0), (0, 0, 1)}))
        module = box_module_of_ideal(ideal, 1)
        assert len(enumerate_quotients(module, 1)) == 2

    def test_skyscraper(self):
        module = staircase_module({(0, 0, 0)})
        assert len(enumerate_quotients(module, 1)) == 1
        assert enumerate_quotients(module, 2) == []

    def test_supports_are_downward_closed(self):
        rng = random.Random(5)
        for _ in range(10):
            module = staircase_module(random_staircase(rng, 6))
            preds = module.predecessors()
            for n in range(len(module) + 1):
                for pt in enumerate_quotients(module, n):
                    assert len(pt) == n
                    assert all(p in pt.support
                               for i in pt.support for p in preds[i])

    def test_count_matches_enumeration_and_brute_force(self):
        rng = random.Random(23)
        for _ in range(10):
            module = staircase_module(random_staircase(rng, rng.randint(2, 7)))
            for n in range(len(module) + 1):
                count = count_quotients(module, n)
                assert count == len(enumerate_quotients(module, n))
                assert count == brute_force_order_ideals(module, n)

    def test_rejects_multiplicities(self):
        module = BoxModule((Box((0, 0, 0), slot=0), Box((0, 0, 0), slot=1)),
                           (frozenset(), frozenset(), frozenset()))
        with pytest.raises(ValueError, match="multiplicity-free"):
            enumerate_quotients(module, 1)

    def test_rejects_exceeding_truncation(self):
        module = box_model_of_ring(2)
        with pytest.raises(ValueError, match="truncation bound"):
            count_quotients(module, 3)
        with pytest.raises(ValueError, match="truncation bound"):
            quot_series(module, 3)


class TestSeries:
    def test_ring_is_macmahon(self):
        module = box_model_of_ring(6)
        assert quot_series(module, 6).coeff_list() == \
            [1, 1, 3, 6, 13, 24, 48]

    def test_zero_module(self):
        assert quot_series(ZERO_MODULE, 4).coeff_list() == [1, 0, 0, 0, 0]

    def test_ray_has_all_ones(self):
        ray = staircase_module({(k, 0, 0) for k in range(6)})
        assert quot_series(ray, 5).coeff_list() == [1] * 6

    def test_colored_rank_two(self):
        assert colored_quot_series(2, 4).coeff_list() == [1, 2, 7, 18, 47]

    def test_colored_equals_macmahon_power(self):
        for r in (1, 2, 3):
            assert colored_quot_series(r, 4) == macmahon(4, r)

    def test_truncation_bound_independence(self):
        ideal = MonomialIdeal(frozenset({(0, 0, 1), (1, 1, 0)}))
        for bound in (3, 5):
            a = quot_series(box_module_of_ideal(ideal, bound), bound)
            b = quot_series(box_module_of_ideal(ideal, bound + 3), bound)
            assert a == b

    def test_disjoint_support_factorizes(self):
        rng = random.Random(41)
        for _ in range(8):
            m1 = staircase_module(random_staircase(rng, rng.randint(1, 5)))
            m2 = staircase_module(random_staircase(rng, rng.randint(1, 5)))
            order = 4
            assert quot_series(direct_sum([m1, m2]), order) == \
                quot_series(m1, order) * quot_series(m2, order)

    def test_duality_bijection(self):
        rng = random.Random(59)
        for _ in range(10):
            module = staircase_module(random_staircase(rng, rng.randint(1, 7)))
            d = len(module)
            dual = matlis_dual(module)
            for n in range(d + 1):
                assert count_quotients(module, n) == \
                    count_quotients(dual, d - n)

    def test_workers_do_not_change_output(self):
        module = box_model_of_ring(5)
        assert quot_series(module, 5, workers=1) == \
            quot_series(module, 5, workers=4)
        assert colored_quot_series(2, 4, workers=1) == \
            colored_quot_series(2, 4, workers=3)

    def test_bad_rank(self):
        with pytest.raises(ValueError):
            colored_quot_series(0, 3)
