import json

import pytest

from escalier.partitions import (
    PlanePartition,
    SolidPartition,
    count_P,
    count_Q,
    enumerate_distinct,
    enumerate_plane_partitions,
    minimal_sum,
    validate,
    validate_solid,
)


def all_distinct_partitions(p):
    """Independent enumeration of distinct-part partitions of p, any length."""
    out = []

    def rec(rem, hi, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for v in range(min(hi, rem), 0, -1):
            rec(rem - v, v - 1, acc + [v])

    rec(p, p, [])
    return out


class TestCounts:
    def test_P_base_cases(self):
        for n in range(0, 12):
            assert count_P(n, n) == 1
        assert count_P(4, 4) == 1
        assert count_P(9, 2) == 4
        assert count_P(3, 7) == 0
        assert count_P(5, 0) == 0

    def test_Q_values(self):
        assert count_Q(10, 3) == 4
        assert count_Q(10, 4) == 1
        for p in range(1, 30):
            assert count_Q(p, 1) == 1

    def test_Q_matches_enumeration(self):
        for p in range(1, 61):
            for k in range(1, 11):
                assert count_Q(p, k) == len(enumerate_distinct(p, k))

    def test_Q_sums_to_distinct_partition_count(self):
        for p in range(1, 41):
            total = sum(count_Q(p, k) for k in range(1, p + 1))
            assert total == len(all_distinct_partitions(p))


class TestEnumerateDistinct:
    def test_six_in_two(self):
        assert enumerate_distinct(6, 2) == [(5, 1), (4, 2)]

    def test_three_in_two(self):
        assert enumerate_distinct(3, 2) == [(2, 1)]

    def test_staircase_forced(self):
        assert enumerate_distinct(10, 4) == [(4, 3, 2, 1)]

    def test_descending_lex_order(self):
        got = enumerate_distinct(12, 3)
        assert got == sorted(got, reverse=True)
        assert all(a > b > c > 0 for a, b, c in got)


class TestMinimalSum:
    def test_values(self):
        assert minimal_sum([5, 1]) == 16
        assert minimal_sum([4, 2, 1]) == 14
        assert minimal_sum([1]) == 1

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            minimal_sum([2, 0])


class TestValidate:
    def test_strict_example(self):
        pp = PlanePartition((3, 2), ((5, 4, 3), (4, 1)), c=1, d=1)
        assert validate(pp)

    def test_shifted_example(self):
        pp = PlanePartition((3, 3), ((5, 4, 3), (4, 1)), c=1, d=0, shifted=True)
        assert validate(pp)

    def test_equal_neighbours_fail_strictness(self):
        assert not validate(PlanePartition((2,), ((2, 2),), c=1, d=1))

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            PlanePartition((3, 2), ((5, 4, 3), (4,)), c=1, d=1)

    def test_shifted_needs_big_last_row(self):
        with pytest.raises(ValueError):
            PlanePartition((3, 1), ((1, 2, 3), (9,)), c=1, d=0, shifted=True)

    def test_json_roundtrip(self):
        pp = PlanePartition((3, 2), ((5, 4), (4, 1)), c=1, d=1, inner=(1, 0))
        doc = json.loads(json.dumps(pp.to_json()))
        assert PlanePartition.from_json(doc) == pp


class TestEnumeratePlanePartitions:
    def test_strict_norm_eight(self):
        got = enumerate_plane_partitions((2, 1), False, 1, 1, (4, 3), (1, 1), 8)
        assert [pp.rows for pp in got] == [
            ((4, 3), (1,)), ((4, 2), (2,)), ((4, 1), (3,)),
        ]

    def test_shifted_norm_seventeen(self):
        got = enumerate_plane_partitions((3, 3, 3), True, 1, 0, (6, 3, 1), (1, 1, 1), 17)
        assert len(got) == 3
        assert ((6, 5, 1), (3, 1), (1,)) in [pp.rows for pp in got]

    def test_norm_below_minimum_is_empty(self):
        assert enumerate_plane_partitions((3, 2), False, 1, 1, (9, 8), (1, 1), 3) == []

    def test_outputs_validate_and_match_requests(self):
        for norm in range(1, 15):
            for pp in enumerate_plane_partitions((2, 2), True, 1, 0, None, (1, 1), norm):
                assert validate(pp)
                assert pp.norm == norm
                assert all(v >= 1 for v in pp.flat())

    def test_removing_bounds_grows_output(self):
        bounded = enumerate_plane_partitions((2, 1), False, 1, 1, (4, 3), (1, 1), 8)
        free = enumerate_plane_partitions((2, 1), False, 1, 1, None, (1, 1), 8)
        assert len(free) > len(bounded)
        shifted_bounded = enumerate_plane_partitions(
            (3, 3, 3), True, 1, 0, (6, 3, 1), (1, 1, 1), 17
        )
        shifted_free = enumerate_plane_partitions(
            (3, 3, 3), True, 1, 0, None, (1, 1, 1), 17
        )
        assert len(shifted_free) > len(shifted_bounded)

    def test_descending_flat_order(self):
        got = enumerate_plane_partitions((3, 1), False, 1, 1, None, (1, 1), 12)
        flats = [pp.flat() for pp in got]
        assert flats == sorted(flats, reverse=True)
        assert len(set(flats)) == len(flats)

    def test_skew_shape(self):
        got = enumerate_plane_partitions(
            (3, 2), False, 1, 1, None, (1, 1), 6, inner=(1, 0)
        )
        for pp in got:
            assert len(pp.rows[0]) == 2 and len(pp.rows[1]) == 2
            assert validate(pp)

    def test_unshift_gives_strict(self):
        # drop the diagonal offsets of a shifted array: rows keep their values
        for norm in range(3, 14):
            for pp in enumerate_plane_partitions((3, 3), True, 1, 0, None, (1, 1), norm):
                rows = pp.rows
                shape = tuple(len(r) for r in rows)
                unshifted = PlanePartition(shape, rows, c=1, d=1)
                assert validate(unshifted)
                assert unshifted.norm == pp.norm


EX_STRICT_SOLID = SolidPartition(
    "strict",
    (((4, 3, 2, 1), (3, 1), (1,)), ((2, 1), (1,)), ((1,),)),
)
EX_SHIFTED_SOLID = SolidPartition(
    "shifted",
    (((3, 2, 1), (2, 1), (1,)), ((2, 1),)),
)


class TestSolidPartitions:
    def test_strict_paper_example(self):
        assert validate_solid(EX_STRICT_SOLID)
        assert EX_STRICT_SOLID.norm == 4 + 3 + 2 + 1 + 3 + 1 + 1 + 2 + 1 + 1 + 1

    def test_shifted_paper_example(self):
        assert validate_solid(EX_SHIFTED_SOLID)
        assert EX_SHIFTED_SOLID.norm == 3 + 2 + 1 + 2 + 1 + 1 + 2 + 1

    def test_equal_stacked_entries_fail_strict(self):
        sp = SolidPartition("strict", (((2,),), ((2,),)))
        assert not validate_solid(sp)

    def test_equal_stacked_entries_fine_shifted(self):
        sp = SolidPartition("shifted", (((2, 1),), ((1,),)))
        # layer 2 starts at row 2, but layer 1 has only one row: invalid shape
        assert not validate_solid(sp)
        ok = SolidPartition("shifted", (((2, 1), (1,)), ((1,),)))
        assert validate_solid(ok)

    def test_layer_shapes_must_shrink(self):
        sp = SolidPartition("strict", (((2,),), ((3, 1),)))
        assert not validate_solid(sp)

    def test_four_dimensional_strict(self):
        ok = SolidPartition(
            "strict",
            (
                (((4, 2), (2,)), ((1,),)),
                (((1,),),),
            ),
            dimension=4,
        )
        assert validate_solid(ok)
        bad = SolidPartition(
            "strict",
            (
                (((4, 2), (2,)), ((1,),)),
                (((1,),),),
                (((1,),),),
            ),
            dimension=4,
        )
        assert not validate_solid(bad)

    def test_kind_checked(self):
        with pytest.raises(ValueError):
            SolidPartition("other", ((1,),))

    def test_json_roundtrip(self):
        doc = json.loads(json.dumps(EX_SHIFTED_SOLID.to_json()))
        assert SolidPartition.from_json(doc) == EX_SHIFTED_SOLID
