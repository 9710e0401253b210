"""Localized equivariant class computations for configuration spaces.

Everything is expressed over a shared variable universe holding the torus
weight names (a1..an, optionally b1..bk), the class parameter y, and any
extra symbols a caller needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .laurent import LaurentPoly, RatFunc, VarUniverse
from .partitions import (SetPartition, coefficient_a, enumerate_partitions,
                         enumerate_refinements)

N_CAP = 6
K_CAP = 7


def standard_universe(n: int, k: int = 0, extras: Tuple[str, ...] = ()) -> VarUniverse:
    names = ["a%d" % i for i in range(1, n + 1)]
    names += ["b%d" % a for a in range(1, k + 1)]
    names.append("y")
    names.extend(extras)
    return VarUniverse(names)


@dataclass(frozen=True)
class TorusData:
    """Weight names of the diagonal torus on C^n, plus optional per-point
    scaling weights."""

    universe: VarUniverse
    alpha: Tuple[str, ...]
    beta: Tuple[str, ...] = ()

    def __post_init__(self):
        if len(set(self.alpha)) != len(self.alpha):
            raise ValueError("alpha names must be distinct")
        for name in tuple(self.alpha) + tuple(self.beta):
            self.universe.index(name)

    @classmethod
    def standard(cls, n: int, k: int = 0, extras: Tuple[str, ...] = ()) -> "TorusData":
        if n > N_CAP:
            raise ValueError("n capped at %d" % N_CAP)
        u = standard_universe(n, k, extras)
        return cls(u,
                   tuple("a%d" % i for i in range(1, n + 1)),
                   tuple("b%d" % a for a in range(1, k + 1)))

    @property
    def n(self) -> int:
        return len(self.alpha)

    def a(self, i: int) -> RatFunc:
        return RatFunc.var(self.universe, self.alpha[i - 1])

    def b(self, a: int) -> RatFunc:
        return RatFunc.var(self.universe, self.beta[a - 1])

    @property
    def y(self) -> RatFunc:
        return RatFunc.var(self.universe, "y")

    def one(self) -> RatFunc:
        return RatFunc.const(self.universe, 1)


@dataclass(frozen=True)
class ProjFixedPoint:
    """Fixed point of projective space to the k-th power: a tuple of
    coordinate-axis indices."""

    iota: Tuple[int, ...]

    def __post_init__(self):
        if any(i < 1 for i in self.iota):
            raise ValueError("indices are 1-based")

    @property
    def k(self) -> int:
        return len(self.iota)

    def induced_partition(self) -> SetPartition:
        groups = {}
        for pos, idx in enumerate(self.iota, start=1):
            groups.setdefault(idx, []).append(pos)
        return SetPartition(self.k, groups.values())


@dataclass(frozen=True)
class LocalClassData:
    """Point restriction of the class of an embedded (possibly singular)
    subvariety, together with the ambient Euler class at that point."""

    mcB: RatFunc
    euTM: RatFunc

    def __post_init__(self):
        if self.euTM.is_zero():
            raise ValueError("ambient Euler class must be nonzero")


def _check_k(k: int):
    if k > K_CAP:
        raise ValueError("k capped at %d" % K_CAP)


def mc_line_classes(universe: VarUniverse, alpha_var: str):
    """Classes of the origin, the line, and the punctured line in a
    one-dimensional weight-`alpha_var` representation.

    Returns (origin, line, punctured) = (1 - 1/a, 1 + y/a, (1+y)/a).
    """
    a = RatFunc.var(universe, alpha_var)
    y = RatFunc.var(universe, "y")
    origin = 1 - 1 / a
    line = 1 + y / a
    return origin, line, line - origin


def euler_point(t: TorusData, k: int = 1) -> RatFunc:
    """Euler class of the origin in (C^n)^k: prod_j (1 - 1/a_j)^k."""
    acc = t.one()
    for i in range(1, t.n + 1):
        acc = acc * (1 - 1 / t.a(i))
    return acc ** k


def euler_point_beta(t: TorusData, k: int) -> RatFunc:
    """Euler class of the origin in (C^n)^k with weights b_a * a_j."""
    acc = t.one()
    for a in range(1, k + 1):
        for j in range(1, t.n + 1):
            acc = acc * (1 - 1 / (t.b(a) * t.a(j)))
    return acc


def lambda_y_proj(t: TorusData, i: int):
    """Cotangent lambda_y and lambda_{-1} of projective space at the i-th
    fixed point: (prod_{j!=i} 1 + y a_i/a_j, prod_{j!=i} 1 - a_i/a_j)."""
    if not 1 <= i <= t.n:
        raise ValueError("fixed point index out of range")
    numer = t.one()
    denom = t.one()
    for j in range(1, t.n + 1):
        if j == i:
            continue
        numer = numer * (1 + t.y * t.a(i) / t.a(j))
        denom = denom * (1 - t.a(i) / t.a(j))
    return numer, denom


def mc_conf_generic(data: LocalClassData, k: int) -> RatFunc:
    """Configuration-space class from point data:
    sum over partitions of a(P) * mcB^|P| * euTM^(k - |P|)."""
    _check_k(k)
    acc = RatFunc.const(data.mcB.universe, 0)
    for p in enumerate_partitions(k):
        acc = acc + coefficient_a(p) * data.mcB ** len(p) * data.euTM ** (k - len(p))
    return acc


def mc_conf_affine(t: TorusData, k: int) -> RatFunc:
    """Class of the configuration space of affine n-space at the origin."""
    _check_k(k)
    acc = RatFunc.const(t.universe, 0)
    for p in enumerate_partitions(k):
        term = RatFunc.const(t.universe, coefficient_a(p))
        for block in p.blocks:
            s = len(block)
            for j in range(1, t.n + 1):
                term = term * (1 + t.y / t.a(j)) * (1 - 1 / t.a(j)) ** (s - 1)
        acc = acc + term
    return acc


def mc_conf_proj_at(t: TorusData, e: ProjFixedPoint) -> RatFunc:
    """Class of the configuration space of projective (n-1)-space restricted
    to a fixed point, summed over refinements of the coincidence partition."""
    _check_k(e.k)
    if any(i > t.n for i in e.iota):
        raise ValueError("fixed point index exceeds n")
    acc = RatFunc.const(t.universe, 0)
    for p in enumerate_refinements(e.induced_partition()):
        term = RatFunc.const(t.universe, coefficient_a(p))
        for block in p.blocks:
            i = e.iota[block[0] - 1]
            s = len(block)
            for j in range(1, t.n + 1):
                if j == i:
                    continue
                term = term * (1 + t.y * t.a(i) / t.a(j)) \
                            * (1 - t.a(i) / t.a(j)) ** (s - 1)
        acc = acc + term
    return acc


def psi(universe: VarUniverse, i: int, j: int, theta: RatFunc) -> RatFunc:
    """Local class factor of a coordinate direction: (1+y)/theta on the
    distinguished diagonal (i = j), 1 - 1/theta otherwise."""
    if theta.is_zero():
        raise ValueError("psi requires a nonzero weight")
    if i == j:
        y = RatFunc.var(universe, "y")
        return (1 + y) / theta
    return 1 - 1 / theta


def mc_orbit_conf(t: TorusData, k: int) -> RatFunc:
    """Class of the space of k pairwise linearly independent nonzero vectors
    in C^n, with per-point scaling weights b_1..b_k."""
    _check_k(k)
    if len(t.beta) < k:
        raise ValueError("need at least k beta names")
    if k == 0:
        return t.one()
    acc = RatFunc.const(t.universe, 0)
    for p in enumerate_partitions(k):
        term = RatFunc.const(t.universe, 1)
        for block in p.blocks:
            s = len(block)
            sign = (-1) ** (s - 1)
            fact = 1
            for m in range(1, s):
                fact *= m
            inner = RatFunc.const(t.universe, 0)
            for i in range(1, t.n + 1):
                prod = t.one()
                for j in range(1, t.n + 1):
                    if j != i:
                        prod = prod * (1 + t.y * t.a(i) / t.a(j)) \
                                    / (1 - t.a(i) / t.a(j))
                    for a in block:
                        prod = prod * psi(t.universe, i, j, t.b(a) * t.a(j))
                inner = inner + prod
            term = term * sign * fact * inner
        acc = acc + term
    return acc


def mc_orbit_full(t: TorusData, k: int) -> RatFunc:
    """Localized class of the space of k vectors with pairwise distinct
    spanned lines where vectors are allowed to vanish: the strictly nonzero
    part plus k copies of the one-fewer-vector part."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_k(k)
    main = mc_orbit_conf(t, k) / euler_point_beta(t, k)
    if k == 1:
        prev = t.one()
    else:
        prev = mc_orbit_conf(t, k - 1) / euler_point_beta(t, k - 1)
    return main + k * prev


def mc_conf_proj_recursion(t: TorusData, e_extended: ProjFixedPoint) -> RatFunc:
    """Class at a length-(k+1) fixed point from the length-k prefix:
    prefix class times (lambda_y at the new point minus the number of
    coincidences times lambda_{-1})."""
    _check_k(e_extended.k)
    iota = e_extended.iota
    last = iota[-1]
    prefix = iota[:-1]
    n_coincide = sum(1 for i in prefix if i == last)
    if prefix:
        base = mc_conf_proj_at(t, ProjFixedPoint(prefix))
    else:
        base = t.one()
    lam_y, lam_m1 = lambda_y_proj(t, last)
    return base * (lam_y - n_coincide * lam_m1)
