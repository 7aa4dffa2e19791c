"""Neighborhood computation and the induced-family oracle."""

import pytest
from hypothesis import given

import covdata
import naive
from covpart import (
    Covering,
    IndexOutOfRange,
    Universe,
    build_covering,
    default_labels,
    is_partition,
    neighborhood,
    neighborhood_masks,
    neighborhoods_family,
    oracle_is_neighborhood_partition,
)
from strategies import coverings


def labels_of(c, mask):
    return set(c.universe.labels_of(mask))


def test_nested_chain_neighborhoods():
    c = covdata.nested_chain()
    assert labels_of(c, neighborhood(c, 0).mask) == {"1", "2"}
    assert labels_of(c, neighborhood(c, 1).mask) == {"1", "2"}
    assert labels_of(c, neighborhood(c, 2).mask) == {"3"}
    assert labels_of(c, neighborhood(c, 3).mask) == {"4"}


def test_single_block_neighborhood_is_universe():
    c = build_covering(["a", "b", "c"], [["a", "b", "c"]])
    for x in range(3):
        assert neighborhood(c, x).mask == c.universe.full_mask


def test_neighborhood_rejects_bad_index():
    c = covdata.two_overlap()
    with pytest.raises(IndexOutOfRange):
        neighborhood(c, 3)


def test_two_overlap_family():
    c = covdata.two_overlap()
    fam = neighborhoods_family(c)
    got = {frozenset(labels_of(c, b.mask)) for b in fam.blocks}
    assert got == {
        frozenset({"1", "2"}),
        frozenset({"2"}),
        frozenset({"2", "3"}),
    }
    # against the independent oracle
    blocks = covdata.index_blocks(covdata.TWO_OVERLAP_BLOCKS, covdata.TWO_OVERLAP_LABELS)
    naive_fam = naive.induced_family(blocks, 3)
    assert {frozenset(b.members()) for b in fam.blocks} == set(naive_fam)


def test_partition_induces_itself():
    c = build_covering(["1", "2", "3", "4"], [["1", "2"], ["3"], ["4"]])
    assert neighborhoods_family(c).masks() == c.masks()


def test_oracle_verdicts_and_witness():
    assert oracle_is_neighborhood_partition(covdata.nested_chain()).is_partition
    v = oracle_is_neighborhood_partition(covdata.two_overlap())
    assert not v.is_partition
    assert v.witness == (0, 1)
    assert v.method == "oracle"
    disjoint = build_covering(["1", "2"], [["1"], ["2"]])
    assert oracle_is_neighborhood_partition(disjoint).is_partition


def test_induced_family_is_valid_covering():
    c = covdata.chain_three()
    fam = neighborhoods_family(c)
    assert isinstance(fam, Covering)
    assert fam.union_mask == c.universe.full_mask


@given(coverings())
def test_element_in_own_neighborhood(c):
    for x, m in enumerate(neighborhood_masks(c)):
        assert (m >> x) & 1


@given(coverings())
def test_neighborhood_nesting(c):
    # y in N(x) forces N(y) inside N(x); mutual membership forces equality
    nb = neighborhood_masks(c)
    for x in range(c.universe.n):
        for y in range(c.universe.n):
            if (nb[x] >> y) & 1:
                assert nb[y] & ~nb[x] == 0
                if (nb[y] >> x) & 1:
                    assert nb[x] == nb[y]


@given(coverings())
def test_oracle_matches_family_predicate(c):
    assert oracle_is_neighborhood_partition(c).is_partition == is_partition(
        neighborhoods_family(c)
    )


@given(coverings(max_n=6))
def test_neighborhoods_match_naive(c):
    blocks = [frozenset(b.members()) for b in c.blocks]
    for x in range(c.universe.n):
        assert frozenset(neighborhood(c, x).members()) == naive.neighborhood(blocks, x)
