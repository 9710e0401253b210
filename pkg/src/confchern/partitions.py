"""Set partitions of {1..k}: enumeration, inclusion-exclusion coefficients,
ordered partitions and refinements."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

PARTITION_CAP = 12
ORDERED_CAP = 9
GRAPH_ORACLE_CAP = 6


class SetPartition:
    """Partition of {1..k} into blocks, stored sorted by least element."""

    __slots__ = ("k", "blocks")

    def __init__(self, k: int, blocks):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            seen.update(b)
        total = sum(len(b) for b in blocks)
        if total != len(seen) or seen != set(range(1, k + 1)):
            raise ValueError("blocks must partition {1..%d}" % k)
        self.k = k
        self.blocks = tuple(sorted(blocks, key=lambda b: b[0]))

    def __eq__(self, other):
        return (isinstance(other, SetPartition)
                and self.k == other.k and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.k, self.blocks))

    def __len__(self):
        return len(self.blocks)

    def block_of(self, i: int) -> Tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def __str__(self):
        return "|".join(",".join(str(i) for i in b) for b in self.blocks)

    __repr__ = __str__

    @classmethod
    def parse(cls, k: int, text: str) -> "SetPartition":
        blocks = [[int(x) for x in chunk.split(",")] for chunk in text.split("|")]
        return cls(k, blocks)


class OrderedPartition:
    """Sequence of nonempty disjoint blocks covering {1..k}; order matters."""

    __slots__ = ("k", "blocks")

    def __init__(self, k: int, blocks):
        SetPartition(k, blocks)  # validates coverage/disjointness
        self.k = k
        self.blocks = tuple(tuple(sorted(b)) for b in blocks)

    def __eq__(self, other):
        return (isinstance(other, OrderedPartition)
                and self.k == other.k and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.k, self.blocks))

    def __str__(self):
        return ";".join(",".join(str(i) for i in b) for b in self.blocks)

    __repr__ = __str__


def enumerate_partitions(k: int) -> List[SetPartition]:
    """All set partitions of [k] in restricted-growth-string order."""
    if not 1 <= k <= PARTITION_CAP:
        raise ValueError("k must be in 1..%d, got %d" % (PARTITION_CAP, k))
    out = []

    # rgs[i] = block index of element i+1; rgs[i] <= max(rgs[:i]) + 1
    def grow(rgs, nblocks):
        if len(rgs) == k:
            blocks = [[] for _ in range(nblocks)]
            for i, b in enumerate(rgs):
                blocks[b].append(i + 1)
            out.append(SetPartition(k, blocks))
            return
        for b in range(nblocks + 1):
            grow(rgs + [b], max(nblocks, b + 1))

    grow([0], 1)
    return out


def enumerate_ordered_partitions(k: int) -> List[OrderedPartition]:
    """All ordered partitions of [k]; count is the ordered Bell number."""
    if not 1 <= k <= ORDERED_CAP:
        raise ValueError("k must be in 1..%d, got %d" % (ORDERED_CAP, k))
    out = []

    def grow(remaining, prefix):
        if not remaining:
            out.append(OrderedPartition(k, prefix))
            return
        rest = sorted(remaining)
        for r in range(1, len(rest) + 1):
            for block in combinations(rest, r):
                grow(remaining - set(block), prefix + [block])

    grow(set(range(1, k + 1)), [])
    return out


def coefficient_a(p: SetPartition) -> Fraction:
    """Inclusion-exclusion coefficient: product over blocks of
    (-1)^(size-1) * (size-1)!."""
    val = 1
    for b in p.blocks:
        s = len(b)
        val *= (-1) ** (s - 1) * math.factorial(s - 1)
    return Fraction(val)


def _component_partition(k: int, edges) -> SetPartition:
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    comps = {}
    for i in range(1, k + 1):
        comps.setdefault(find(i), []).append(i)
    return SetPartition(k, comps.values())


def coefficient_a_graph_oracle(p: SetPartition) -> Fraction:
    """Signed sum over all graphs on [k] whose connected components induce
    exactly the given partition.  Exponential in k; test oracle only."""
    k = p.k
    if k > GRAPH_ORACLE_CAP:
        raise ValueError("graph oracle capped at k <= %d" % GRAPH_ORACLE_CAP)
    all_edges = list(combinations(range(1, k + 1), 2))
    total = 0
    for r in range(len(all_edges) + 1):
        for edges in combinations(all_edges, r):
            if _component_partition(k, edges) == p:
                total += (-1) ** r
    return Fraction(total)


def connected_sum_b(k: int) -> Fraction:
    """Signed graph count over connected graphs on [k], computed by the
    split-at-one-edge recursion (choose which of the k-2 remaining vertices
    stay with vertex 1).  Equals (-1)^(k-1)(k-1)!."""
    if k < 1:
        raise ValueError("k must be positive")
    b = [None, Fraction(1)]
    for m in range(2, k + 1):
        total = Fraction(0)
        for i in range(1, m):
            total += math.comb(m - 2, i - 1) * b[i] * b[m - i]
        b.append(-total)
    return b[k]


def enumerate_refinements(p0: SetPartition) -> List[SetPartition]:
    """All partitions of [k] each of whose blocks lies inside a block of p0."""
    per_block = []
    for b in p0.blocks:
        m = len(b)
        subparts = []
        for q in enumerate_partitions(m):
            subparts.append([tuple(b[i - 1] for i in qb) for qb in q.blocks])
        per_block.append(subparts)

    out = []

    def combine(i, acc):
        if i == len(per_block):
            out.append(SetPartition(p0.k, acc))
            return
        for sub in per_block[i]:
            combine(i + 1, acc + sub)

    combine(0, [])
    return out


def bell_number_oracle(n: int) -> int:
    """Bell numbers via the recurrence B(n+1) = sum C(n,i) B(i)."""
    b = [1]
    for m in range(n):
        b.append(sum(math.comb(m, i) * b[i] for i in range(m + 1)))
    return b[n]
