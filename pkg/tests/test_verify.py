import json
import random

import pytest

from boxquot.descriptions import (DescriptionError, fixture,
                                  parse_module_description)
from boxquot.series import macmahon
from boxquot.verify import (IdentityReport, check_cor, check_dtpt, check_dual,
                            check_locfree, check_main)
from helpers import random_staircase, staircase_module


def desc(obj):
    return parse_module_description(obj)


class TestCheckMain:
    def test_free_rank_two(self):
        report = check_main(fixture("free-r2"), 4)
        assert report.match
        assert report.lhs == [1, 2, 7, 18, 47]
        assert report.clipped_at is None

    def test_rank2_cokernel_clipped(self):
        report = check_main(fixture("rank2-R"), 4, n_max=2)
        assert report.match
        assert report.clipped_at == 2
        assert report.lhs == [1, 3, 9]

    def test_sum_of_two_lines(self):
        d = desc({"kind": "direct_sum", "summands": [
            {"kind": "ideal", "generators": [[0, 1, 0], [0, 0, 1]]},
            {"kind": "ideal", "generators": [[1, 0, 0], [0, 0, 1]]},
        ]})
        report = check_main(d, 4)
        assert report.match
        assert report.lhs == [1, 4, 14, 42, 117]

    def test_ring_plus_line(self):
        d = desc({"kind": "direct_sum", "summands": [
            {"kind": "ideal", "generators": [[0, 0, 0]]},
            {"kind": "ideal", "generators": [[0, 1, 0], [0, 0, 1]]},
        ]})
        report = check_main(d, 4)
        assert report.match
        assert report.lhs == [1, 3, 10, 28, 75]

    def test_single_line_ideal(self):
        d = desc({"kind": "ideal", "generators": [[0, 1, 0], [0, 0, 1]]})
        report = check_main(d, 5)
        assert report.match
        # MacMahon / (1 - q)
        assert report.lhs == [1, 2, 5, 11, 24, 48]

    def test_point_ideal_has_hd_two(self):
        d = desc({"kind": "ideal",
                  "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
        with pytest.raises(ValueError, match="hd exceeds 1"):
            check_main(d, 3)

    def test_report_schema(self):
        report = check_main(fixture("free-r2"), 3)
        data = json.loads(json.dumps(report.to_json()))
        assert set(data) == {"identity", "order", "lhs", "rhs", "match",
                             "first_mismatch", "clipped_at", "notes"}
        assert data["identity"] == "main"
        assert all(isinstance(c, str) for c in data["lhs"] + data["rhs"])


class TestCheckDtpt:
    def test_line(self):
        report = check_dtpt(fixture("line"), 5)
        assert report.match
        assert report.lhs == [1, 2, 5, 11, 24, 48]

    def test_two_axes(self):
        report = check_dtpt(fixture("two-axes"), 5)
        assert report.match
        assert report.lhs == [1, 2, 6, 14, 32, 67]

    def test_fat_line(self):
        report = check_dtpt(fixture("fat-line"), 5)
        assert report.match
        assert report.lhs == [1, 2, 6, 13, 30, 61]

    def test_non_cm_ideal_rejected(self):
        d = desc({"kind": "ideal",
                  "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
        with pytest.raises(ValueError, match="Cohen-Macaulay"):
            check_dtpt(d, 3)

    def test_plane_rejected(self):
        d = desc({"kind": "ideal", "generators": [[1, 0, 0]]})
        with pytest.raises(ValueError, match="Cohen-Macaulay"):
            check_dtpt(d, 3)


class TestCheckCor:
    def test_rank2_skyscraper(self):
        report = check_cor(fixture("rank2-R"), fixture("rank2-R"))
        assert report.match
        assert report.lhs == [1, 1]
        assert any("palindromic" in note for note in report.notes)

    def test_free_rank_two(self):
        d = desc({"kind": "complex", "levels": [[[0, 0, 0], [0, 0, 0]]]})
        report = check_cor(d, d)
        assert report.match
        assert report.lhs == [1]

    def test_infinite_ext_rejected(self):
        d = desc({"kind": "ideal", "generators": [[0, 1, 0], [0, 0, 1]]})
        with pytest.raises(ValueError, match="not finite"):
            check_cor(d, d)


class TestCheckDual:
    def test_chain(self):
        module = staircase_module({(0, 0, 0), (1, 0, 0), (2, 0, 0)})
        report = check_dual(module)
        assert report.match
        assert report.lhs == [1, 1, 1, 1]

    def test_random_finite_modules(self):
        rng = random.Random(97)
        for _ in range(10):
            module = staircase_module(random_staircase(rng, rng.randint(1, 6)))
            report = check_dual(module)
            assert report.match, report.to_table()

    def test_description_round_trip(self):
        module = staircase_module({(0, 0, 0), (0, 1, 0)})
        d = desc({"kind": "finite_boxes",
                  "boxes": [{"weight": [0, 0, 0]}, {"weight": [0, 1, 0]}],
                  "edges": [[], [[0, 1]], []]})
        assert check_dual(d).match
        assert check_dual(d).lhs == check_dual(module).lhs

    def test_rejects_truncations(self):
        from boxquot.quot import box_model_of_ring
        with pytest.raises(ValueError, match="finite"):
            check_dual(box_model_of_ring(3))

    def test_rejects_wrong_kind(self):
        with pytest.raises(DescriptionError, match="finite_boxes"):
            check_dual(fixture("line"))


class TestCheckLocfree:
    def test_rank_one(self):
        report = check_locfree(1, 6)
        assert report.match
        assert report.lhs == [1, 1, 3, 6, 13, 24, 48]

    def test_rank_two(self):
        report = check_locfree(2, 5)
        assert report.match
        assert report.lhs == macmahon(5, 2).coeff_list()

    def test_rank_three(self):
        report = check_locfree(3, 3)
        assert report.match
        assert report.lhs == [1, 3, 12, 37]


class TestReportFormatting:
    def test_table_contains_rows(self):
        report = check_locfree(1, 3)
        table = report.to_table()
        assert "lhs" in table and "rhs" in table and "match: yes" in table

    def test_mismatch_rendering(self):
        report = IdentityReport("main", 1, [1, 2], [1, 3], False,
                                first_mismatch=1)
        assert "NO" in report.to_table()
        assert "mismatch at exponent 1" in report.to_table()
        assert report.to_json()["match"] is False
