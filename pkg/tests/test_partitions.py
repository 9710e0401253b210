"""Tests for set-partition enumeration and inclusion-exclusion coefficients."""

import math
from collections import Counter
from fractions import Fraction

import pytest

from confchern.partitions import (OrderedPartition, SetPartition,
                                  bell_number_oracle, coefficient_a,
                                  coefficient_a_graph_oracle, connected_sum_b,
                                  enumerate_ordered_partitions,
                                  enumerate_partitions, enumerate_refinements)


def test_partition_validation():
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2]])  # misses 3
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2], [2, 3]])  # overlap
    with pytest.raises(ValueError):
        SetPartition(2, [[1, 2], []])


def test_partition_canonical_order_and_parse():
    p = SetPartition(3, [[3], [2, 1]])
    assert str(p) == "1,2|3"
    assert SetPartition.parse(3, "1,2|3") == p
    assert p.block_of(2) == (1, 2)


def test_enumerate_k1():
    assert enumerate_partitions(1) == [SetPartition(1, [[1]])]


@pytest.mark.parametrize("k", range(1, 8))
def test_enumerate_counts_match_bell_oracle(k):
    parts = enumerate_partitions(k)
    assert len(parts) == bell_number_oracle(k)
    assert len(set(parts)) == len(parts)


def test_enumerate_cap():
    with pytest.raises(ValueError):
        enumerate_partitions(13)
    with pytest.raises(ValueError):
        enumerate_partitions(0)


def test_ordered_counts():
    assert len(enumerate_ordered_partitions(1)) == 1
    assert len(enumerate_ordered_partitions(2)) == 3
    assert len(enumerate_ordered_partitions(3)) == 13


def test_ordered_k2_contents():
    got = set(enumerate_ordered_partitions(2))
    want = {OrderedPartition(2, [(1, 2)]),
            OrderedPartition(2, [(1,), (2,)]),
            OrderedPartition(2, [(2,), (1,)])}
    assert got == want


@pytest.mark.parametrize("k", range(1, 7))
def test_ordered_count_equals_partition_factorial_sum(k):
    want = sum(math.factorial(len(p)) for p in enumerate_partitions(k))
    assert len(enumerate_ordered_partitions(k)) == want


def test_coefficient_a_examples():
    assert coefficient_a(SetPartition.parse(3, "1|2|3")) == 1
    assert coefficient_a(SetPartition.parse(3, "1,2|3")) == -1
    assert coefficient_a(SetPartition.parse(3, "1,2,3")) == 2


def test_graph_oracle_examples():
    assert coefficient_a_graph_oracle(SetPartition.parse(2, "1|2")) == 1
    assert coefficient_a_graph_oracle(SetPartition.parse(2, "1,2")) == -1
    # 3 spanning trees (+1 each) and the triangle (-1)
    assert coefficient_a_graph_oracle(SetPartition.parse(3, "1,2,3")) == 2


@pytest.mark.parametrize("k", range(1, 6))
def test_coefficient_matches_graph_oracle_exhaustive(k):
    for p in enumerate_partitions(k):
        assert coefficient_a(p) == coefficient_a_graph_oracle(p)


def test_graph_oracle_cap():
    with pytest.raises(ValueError):
        coefficient_a_graph_oracle(SetPartition(7, [[i] for i in range(1, 8)]))


def test_connected_sum_values():
    assert connected_sum_b(1) == 1
    assert connected_sum_b(2) == -1
    assert connected_sum_b(4) == -6


@pytest.mark.parametrize("k", range(1, 9))
def test_connected_sum_closed_form(k):
    assert connected_sum_b(k) == Fraction((-1) ** (k - 1) * math.factorial(k - 1))


def test_refinements_examples():
    singletons = SetPartition.parse(3, "1|2|3")
    assert enumerate_refinements(singletons) == [singletons]

    full = SetPartition.parse(3, "1,2,3")
    assert len(enumerate_refinements(full)) == 5

    p0 = SetPartition.parse(3, "1,2|3")
    got = set(enumerate_refinements(p0))
    assert got == {p0, singletons}


@pytest.mark.parametrize("k", range(1, 7))
def test_block_size_profile_counts(k):
    # number of partitions with block sizes λ is k! / prod_i (i!)^n_i n_i!
    profiles = Counter(tuple(sorted(len(b) for b in p.blocks))
                       for p in enumerate_partitions(k))
    for profile, count in profiles.items():
        mult = Counter(profile)
        want = math.factorial(k)
        for size, n_i in mult.items():
            want //= math.factorial(size) ** n_i * math.factorial(n_i)
        assert count == want
