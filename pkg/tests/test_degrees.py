"""Membership and pair repeat degrees, uniform blocks, the degree table."""

import pytest
from hypothesis import given

import covdata
import naive
from covpart import (
    IndexOutOfRange,
    all_uniform,
    build_covering,
    common_block_repeat_degree,
    degree_table,
    enumerate_coverings,
    excluded_number,
    is_uniform_block,
    membership_repeat_degree,
    neighborhood,
)
from strategies import coverings


def test_two_overlap_degrees():
    c = covdata.two_overlap()
    assert [membership_repeat_degree(c, x) for x in range(3)] == [1, 2, 1]


def test_reducible_family_degrees():
    c = covdata.reducible_family()
    assert membership_repeat_degree(c, 0) == 3
    assert membership_repeat_degree(c, 1) == 2
    assert membership_repeat_degree(c, 2) == 2


def test_partition_degrees_all_one():
    c = build_covering(["1", "2", "3", "4"], [["1", "2"], ["3"], ["4"]])
    assert all(membership_repeat_degree(c, x) == 1 for x in range(4))


def test_chain_three_pair_degrees():
    c = covdata.chain_three()
    lab = {s: i for i, s in enumerate(c.universe.labels)}
    pairs = {
        ("1", "2"): 1,
        ("2", "3"): 1,
        ("2", "4"): 1,
        ("1", "3"): 0,
        ("1", "4"): 0,
        ("3", "4"): 2,
    }
    for (a, b), want in pairs.items():
        assert common_block_repeat_degree(c, lab[a], lab[b]) == want
        assert common_block_repeat_degree(c, lab[b], lab[a]) == want


def test_pair_degree_diagonal_is_membership_degree():
    c = covdata.chain_three()
    for x in range(4):
        assert common_block_repeat_degree(c, x, x) == membership_repeat_degree(c, x)


def test_excluded_numbers_from_chain_three():
    c = covdata.chain_three()
    assert excluded_number(c, 0, 1) == 0  # both blocks of 1 contain 2
    assert excluded_number(c, 1, 0) == 1
    for x in range(4):
        assert excluded_number(c, x, x) == 0


def test_uniform_blocks_chain_three():
    c = covdata.chain_three()
    flags = {
        frozenset(c.universe.labels_of(b.mask)): is_uniform_block(c, k)
        for k, b in enumerate(c.blocks)
    }
    assert flags[frozenset({"2", "3", "4"})] is True
    assert flags[frozenset({"3", "4"})] is True
    assert flags[frozenset({"1", "2"})] is False
    assert not all_uniform(c)


def test_uniform_blocks_nonuniform_partition():
    c = covdata.nonuniform_partition()
    assert membership_repeat_degree(c, 2) == 3
    assert membership_repeat_degree(c, 3) == 2
    k = next(
        i
        for i, b in enumerate(c.blocks)
        if set(c.universe.labels_of(b.mask)) == {"3", "4"}
    )
    assert not is_uniform_block(c, k)


def test_singleton_block_is_uniform():
    c = build_covering(["1", "2"], [["1"], ["1", "2"]])
    k = next(i for i, b in enumerate(c.blocks) if len(b) == 1)
    assert is_uniform_block(c, k)


def test_triangle_all_uniform_and_reducible_family_not():
    assert all_uniform(covdata.triangle())
    c = covdata.reducible_family()
    for labels in (["1", "2"], ["1", "3"]):
        k = next(
            i
            for i, b in enumerate(c.blocks)
            if set(c.universe.labels_of(b.mask)) == set(labels)
        )
        assert not is_uniform_block(c, k)


def test_partitions_are_all_uniform():
    assert all_uniform(build_covering(["1", "2", "3"], [["1", "2"], ["3"]]))


def test_degree_table_chain_three():
    t = degree_table(covdata.chain_three())
    assert t.membership == (1, 2, 2, 2)
    assert t.common(0, 1) == 1 and t.common(1, 2) == 1 and t.common(1, 3) == 1
    assert t.common(0, 2) == 0 and t.common(0, 3) == 0
    assert t.common(2, 3) == 2


def test_degree_table_single_block():
    c = build_covering(["a", "b", "c"], [["a", "b", "c"]])
    t = degree_table(c)
    assert t.membership == (1, 1, 1)
    for x in range(3):
        for y in range(3):
            assert t.common(x, y) == 1


def test_index_errors():
    c = covdata.two_overlap()
    with pytest.raises(IndexOutOfRange):
        membership_repeat_degree(c, 5)
    with pytest.raises(IndexOutOfRange):
        common_block_repeat_degree(c, 0, -1)
    with pytest.raises(IndexOutOfRange):
        is_uniform_block(c, 2)
    with pytest.raises(IndexOutOfRange):
        degree_table(c).common(0, 3)


def test_degree_table_matches_recount_exhaustively():
    for n in (1, 2, 3):
        for c in enumerate_coverings(n):
            blocks = [frozenset(b.members()) for b in c.blocks]
            t = degree_table(c)
            for x in range(n):
                assert t.membership[x] == naive.degree(blocks, x) >= 1
                for y in range(n):
                    assert t.common(x, y) == naive.common_degree(blocks, x, y)
                    assert t.common(x, y) == naive.common_degree(blocks, y, x)


def test_containing_sets_equal_iff_degree_matches_pair_degree():
    for c in enumerate_coverings(3):
        blocks = [frozenset(b.members()) for b in c.blocks]
        t = degree_table(c)
        for x in range(3):
            for y in range(3):
                containing_x = [b for b in blocks if x in b]
                containing_both = [b for b in blocks if x in b and y in b]
                assert (containing_x == containing_both) == (
                    t.membership[x] == t.common(x, y)
                )


@given(coverings())
def test_table_consistent_with_per_element_ops(c):
    t = degree_table(c)
    n = c.universe.n
    for x in range(n):
        assert t.membership[x] == membership_repeat_degree(c, x)
        assert t.common(x, x) == t.membership[x]
    for x in range(n):
        for y in range(x + 1, n):
            got = t.common(x, y)
            assert got == common_block_repeat_degree(c, x, y)
            assert got == t.common(y, x)
            assert got <= min(t.membership[x], t.membership[y])


@given(coverings())
def test_membership_in_neighborhood_iff_zero_excluded_number(c):
    n = c.universe.n
    for x in range(n):
        nb = neighborhood(c, x).mask
        for y in range(n):
            assert ((nb >> y) & 1 == 1) == (excluded_number(c, x, y) == 0)
