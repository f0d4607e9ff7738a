"""Starred-class scans: divisibility, bijection, balance, and ratio evidence."""

import pytest

from hookcensus.conjectures import (
    ScanResult,
    divisibility_scan,
    star_balanced_scan,
    star_class_bijection_scan,
    star_counts,
    star_ratio_evidence,
)
from hookcensus.partitions import PartitionClass, enumerate_partitions, hook_multiset


class TestStarCounts:
    def test_self_conjugate_four(self):
        assert list(enumerate_partitions(PartitionClass.SELF_CONJUGATE, 4)) == [(2, 2)]
        assert sorted(hook_multiset((2, 2))) == [1, 2, 2, 3]
        # (2,2) carries two 2-hooks; (3,1) is the lone distinct-odd partition
        assert star_counts(2, 4) == (2, 1)

    def test_no_distinct_odd_partitions_of_two(self):
        for h in range(1, 6):
            assert star_counts(h, 2)[1] == 0

    def test_distinct_odd_members(self):
        assert list(enumerate_partitions(PartitionClass.DISTINCT_ODD, 8)) == [(7, 1), (5, 3)]


class TestScans:
    def test_divisibility_scan_clean(self):
        result = divisibility_scan(5, 24)
        assert isinstance(result, ScanResult)
        assert result.holds
        assert result.summary["checked"] == 5 * 25
        assert result.summary["violations"] == 0

    def test_divisibility_example(self):
        # the lone self-conjugate partition of 4 contributes two 2-hooks
        assert star_counts(2, 4)[0] % 2 == 0

    def test_bijection_scan(self):
        result = star_class_bijection_scan(40)
        assert result.holds

    def test_star_balanced_scan(self):
        result = star_balanced_scan(24)
        assert result.holds

    def test_validation(self):
        with pytest.raises(ValueError):
            divisibility_scan(0, 10)
        with pytest.raises(ValueError):
            star_ratio_evidence(1, [10])


class TestRatioEvidence:
    def test_rows_and_markers(self):
        result = star_ratio_evidence(2, list(range(2, 21)))
        rows = result.summary["rows"]
        assert [r["n"] for r in rows] == list(range(2, 21))
        for row in rows:
            a_star, b_star = star_counts(2, row["n"])
            assert row["a_star"] == a_star and row["b_star"] == b_star
            if b_star == 0:
                assert row["ratio"] is None
            else:
                assert row["ratio"] == pytest.approx(a_star / b_star)
        assert result.summary["skipped_zero_denominator"] == \
            sum(1 for r in rows if r["ratio"] is None)
        assert {"min_ratio", "max_ratio", "last_ratio"} <= set(result.summary)
        assert result.counterexamples == []

    def test_json_schema(self):
        doc = star_ratio_evidence(2, [10, 12]).to_json_dict()
        assert set(doc) == {"conjecture", "range", "counterexamples", "summary"}
