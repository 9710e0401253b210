"""Truncated power series in t over rational-function coefficients, the
exponential/logarithm pair, the generating-series verification engines, and
exact residue computation for the residue-form check."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

from .laurent import (LaurentPoly, RatFunc, UniverseMismatchError, VarUniverse,
                      ZeroDenominatorError)
from .partitions import coefficient_a, enumerate_partitions
from .classes import (TorusData, euler_point, lambda_y_proj, mc_orbit_conf,
                      mc_orbit_full, euler_point_beta)


class TruncSeries:
    """Power series in t truncated (inclusively) at a fixed order."""

    __slots__ = ("universe", "order", "coeffs")

    def __init__(self, universe: VarUniverse, order: int,
                 coeffs: Sequence[RatFunc] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            raise ValueError("too many coefficients for the truncation order")
        while len(coeffs) < order + 1:
            coeffs.append(RatFunc.const(universe, 0))
        for c in coeffs:
            if c.universe != universe:
                raise UniverseMismatchError("coefficient universe mismatch")
        self.universe = universe
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def const(cls, universe: VarUniverse, order: int, c) -> "TruncSeries":
        if isinstance(c, (int, Fraction)):
            c = RatFunc.const(universe, c)
        return cls(universe, order, [c])

    @classmethod
    def t(cls, universe: VarUniverse, order: int) -> "TruncSeries":
        zero = RatFunc.const(universe, 0)
        one = RatFunc.const(universe, 1)
        return cls(universe, order, [zero, one])

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return TruncSeries.const(self.universe, self.order, other)
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise ValueError("truncation order mismatch")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncSeries(self.universe, self.order,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.universe, self.order,
                           [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        zero = RatFunc.const(self.universe, 0)
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.universe, self.order, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("series power must be a nonnegative integer")
        result = TruncSeries.const(self.universe, self.order, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        raise TypeError("TruncSeries is not hashable")

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term."""
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs zero constant term")
        result = TruncSeries.const(self.universe, self.order, 1)
        power = TruncSeries.const(self.universe, self.order, 1)
        for m in range(1, self.order + 1):
            power = power * self
            result = result + Fraction(1, math.factorial(m)) * power
        return result

    def log1p(self) -> "TruncSeries":
        """log(1 + self) for a series with zero constant term."""
        if not self.coeffs[0].is_zero():
            raise ValueError("log1p needs zero constant term")
        result = TruncSeries.const(self.universe, self.order, 0)
        power = TruncSeries.const(self.universe, self.order, 1)
        for m in range(1, self.order + 1):
            power = power * self
            result = result + Fraction((-1) ** (m - 1), m) * power
        return result

    def __str__(self) -> str:
        parts = []
        for u, c in enumerate(self.coeffs):
            if u == 0:
                parts.append("%s" % c)
            elif u == 1:
                parts.append("(%s)*t" % c)
            else:
                parts.append("(%s)*t^%d" % (c, u))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Generating-series identity checks
# ---------------------------------------------------------------------------

def check_partition_exp_identity(n_order: int) -> bool:
    """Master identity: the partition sum with one free symbol per block
    size equals exp of the alternating-harmonic combination.

    With f(u) = x_u t^u, compares
      1 + sum_k (1/k!) sum_P a(P) prod_blocks x_|block|   at t^k
    against exp(sum_u (-1)^(u-1) x_u t^u / u), coefficient-wise.
    Truth here is a polynomial identity in x_1..x_N.
    """
    if n_order > 7:
        raise ValueError("order capped at 7")
    universe = VarUniverse(tuple("x%d" % u for u in range(1, n_order + 1)))
    lhs = TruncSeries.const(universe, n_order, 1)
    for k in range(1, n_order + 1):
        coeff = RatFunc.const(universe, 0)
        for p in enumerate_partitions(k):
            term = RatFunc.const(universe, coefficient_a(p))
            for block in p.blocks:
                term = term * RatFunc.var(universe, "x%d" % len(block))
            coeff = coeff + term
        coeff = Fraction(1, math.factorial(k)) * coeff
        lhs = lhs + coeff * TruncSeries.t(universe, n_order) ** k

    arg = TruncSeries.const(universe, n_order, 0)
    for u in range(1, n_order + 1):
        xu = RatFunc.var(universe, "x%d" % u)
        arg = arg + (Fraction((-1) ** (u - 1), u) * xu) \
            * TruncSeries.t(universe, n_order) ** u
    return lhs == arg.exp()


def check_point_series(n_order: int) -> bool:
    """Point-restriction series with one free symbol for the localized
    subvariety class: partition sums vs exp(m * log(1+t))."""
    universe = VarUniverse(("m", "e"))
    m = RatFunc.var(universe, "m")
    lhs = TruncSeries.const(universe, n_order, 1)
    for k in range(1, n_order + 1):
        coeff = RatFunc.const(universe, 0)
        for p in enumerate_partitions(k):
            coeff = coeff + coefficient_a(p) * m ** len(p)
        lhs = lhs + (Fraction(1, math.factorial(k)) * coeff) \
            * TruncSeries.t(universe, n_order) ** k
    t = TruncSeries.t(universe, n_order)
    rhs = (TruncSeries.const(universe, n_order, m) * t.log1p()).exp()
    return lhs == rhs


def check_point_series_ambient(n_order: int) -> bool:
    """Two-symbol diagonal form: partition sums weighted by the ambient
    Euler symbol e, against exp(m * log(1 + t e)/e)."""
    universe = VarUniverse(("m", "e"))
    m = RatFunc.var(universe, "m")
    e = RatFunc.var(universe, "e")
    lhs = TruncSeries.const(universe, n_order, 1)
    for k in range(1, n_order + 1):
        coeff = RatFunc.const(universe, 0)
        for p in enumerate_partitions(k):
            coeff = coeff + coefficient_a(p) * m ** len(p) * e ** (k - len(p))
        lhs = lhs + (Fraction(1, math.factorial(k)) * coeff) \
            * TruncSeries.t(universe, n_order) ** k
    # log(1 + e t)/e expanded termwise; no division by the symbol e needed
    arg = TruncSeries.const(universe, n_order, 0)
    for u in range(1, n_order + 1):
        c = Fraction((-1) ** (u - 1), u) * m * e ** (u - 1)
        arg = arg + c * TruncSeries.t(universe, n_order) ** u
    return lhs == arg.exp()


def orbit_series_sides(n: int, n_order: int):
    """Both sides of the orbit-configuration generating series, as truncated
    series over the weight universe (scaling weights specialized to 1)."""
    t_data = TorusData.standard(n, k=n_order)
    universe = t_data.universe
    ones = {name: 1 for name in t_data.beta}
    lhs = TruncSeries.const(universe, n_order, 1)
    for k in range(1, n_order + 1):
        cls = mc_orbit_conf(t_data, k).substitute(ones, universe)
        coeff = cls / euler_point(t_data, k)
        lhs = lhs + (Fraction(1, math.factorial(k)) * coeff) \
            * TruncSeries.t(universe, n_order) ** k

    rhs = TruncSeries.const(universe, n_order, 1)
    one_plus_y = 1 + t_data.y
    for i in range(1, n + 1):
        lam_y, lam_m1 = lambda_y_proj(t_data, i)
        arg = (one_plus_y / (t_data.a(i) - 1)) * TruncSeries.t(universe, n_order)
        rhs = rhs * ((lam_y / lam_m1) * arg.log1p()).exp()
    return lhs, rhs


def check_orbit_series(n: int, n_order: int) -> bool:
    if n > 3 or n_order > 4:
        raise ValueError("orbit series check capped at n <= 3, N <= 4")
    lhs, rhs = orbit_series_sides(n, n_order)
    return lhs == rhs


def orbit_full_series(n: int, n_order: int) -> TruncSeries:
    """Exponential series of the vanishing-allowed orbit classes (scaling
    weights specialized to 1)."""
    t_data = TorusData.standard(n, k=n_order)
    universe = t_data.universe
    ones = {name: 1 for name in t_data.beta}
    lhs = TruncSeries.const(universe, n_order, 1)
    for k in range(1, n_order + 1):
        coeff = mc_orbit_full(t_data, k).substitute(ones, universe)
        lhs = lhs + (Fraction(1, math.factorial(k)) * coeff) \
            * TruncSeries.t(universe, n_order) ** k
    return lhs


def check_orbit_full_series(n: int, n_order: int) -> bool:
    """Vanishing-allowed variant: its series must equal (1 + t) * f(t)
    where f is the orbit series.

    The extra term k * m_{k-1} in the k-th coefficient sums to t*f(t), not
    t*f'(t): t*f'(t) would require k * m_k instead.  (Checked by hand at
    n=1: the k=1 coefficient of the full space is m_1 + 1, which only the
    (1+t)*f form reproduces.)
    """
    lhs = orbit_full_series(n, n_order)
    f, _ = orbit_series_sides(n, n_order)
    one_plus_t = TruncSeries.const(f.universe, n_order, 1) \
        + TruncSeries.t(f.universe, n_order)
    return lhs == one_plus_t * f


# ---------------------------------------------------------------------------
# Residues
# ---------------------------------------------------------------------------

def _univariate_in(f: RatFunc, name: str):
    """Split a rational function into coefficient lists along one variable.

    Returns (num, den) as lists of variable-free-in-`name` RatFunc
    coefficients indexed by degree; both are genuine polynomials in `name`.
    """
    shift = min(f.num.min_exp(name), 0)
    num = f.num.shift({name: -shift})
    den = f.den.shift({name: -shift})

    def coeffs(p: LaurentPoly):
        top = p.max_exp(name)
        return [RatFunc(p.coeff_of(name, d)) for d in range(top + 1)]

    return coeffs(num), coeffs(den)


def _poly_eval(coeffs: List[RatFunc], point: RatFunc) -> RatFunc:
    acc = RatFunc.const(point.universe, 0)
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


def _poly_deriv(coeffs: List[RatFunc]) -> List[RatFunc]:
    return [d * c for d, c in enumerate(coeffs)][1:] or \
        [RatFunc.const(coeffs[0].universe, 0)]

def _poly_mul(a: List[RatFunc], b: List[RatFunc]) -> List[RatFunc]:
    universe = a[0].universe
    out = [RatFunc.const(universe, 0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, z in enumerate(b):
            out[i + j] = out[i + j] + x * z
    return out


def _poly_sub(a: List[RatFunc], b: List[RatFunc]) -> List[RatFunc]:
    universe = a[0].universe
    n = max(len(a), len(b))
    pad = lambda p: p + [RatFunc.const(universe, 0)] * (n - len(p))
    return [x - z for x, z in zip(pad(a), pad(b))]


def _deflate(coeffs: List[RatFunc], root: RatFunc):
    """Divide out (z - root) as often as it is an exact factor.

    Returns (multiplicity, quotient coefficients)."""
    mult = 0
    while len(coeffs) > 1 or not coeffs[0].is_zero():
        # synthetic division by (z - root)
        quot = [RatFunc.const(root.universe, 0)] * (len(coeffs) - 1)
        carry = RatFunc.const(root.universe, 0)
        for d in range(len(coeffs) - 1, -1, -1):
            if d > 0:
                quot[d - 1] = coeffs[d] + carry
                carry = quot[d - 1] * root
            else:
                rem = coeffs[0] + carry
        if not rem.is_zero():
            break
        coeffs = quot if quot else [RatFunc.const(root.universe, 0)]
        mult += 1
        if len(coeffs) == 1 and coeffs[0].is_zero():
            break
    return mult, coeffs


class PoleOrderError(ValueError):
    pass


def residue_at(f: RatFunc, var: str, pole: Fraction, max_order: int = 8) -> RatFunc:
    """Coefficient of 1/(var - pole) in the Laurent expansion of f.

    The function must be rational in `var`; remaining variables ride along
    in the coefficient field.  Higher-order poles are handled via the
    derivative formula on the regularized function.
    """
    universe = f.universe
    p = RatFunc.const(universe, pole)
    num, den = _univariate_in(f, var)
    m_den, den = _deflate(den, p)
    m_num, num = _deflate(num, p)
    cancel = min(m_num, m_den)
    m = m_den - cancel
    if m_num > m_den:
        # extra zero factors in the numerator: restore them
        lin = [-p, RatFunc.const(universe, 1)]
        for _ in range(m_num - m_den):
            num = _poly_mul(num, lin)
    if m == 0:
        return RatFunc.const(universe, 0)
    if m > max_order:
        raise PoleOrderError("pole order %d exceeds max_order %d" % (m, max_order))
    # h = num/den is regular at the pole; residue = h^(m-1)(pole)/(m-1)!
    for _ in range(m - 1):
        num, den = (
            _poly_sub(_poly_mul(_poly_deriv(num), den),
                      _poly_mul(num, _poly_deriv(den))),
            _poly_mul(den, den),
        )
    val_den = _poly_eval(den, p)
    if val_den.is_zero():
        raise ZeroDenominatorError("residual zero denominator at the pole")
    value = _poly_eval(num, p) / val_den
    return Fraction(1, math.factorial(m - 1)) * value


def residue_form_factor(universe: VarUniverse, alphas: Sequence[Fraction],
                        u: int) -> RatFunc:
    """The t^u coefficient of the residue-form integrand: a univariate
    rational function of z with polynomial-in-y coefficients."""
    y = RatFunc.var(universe, "y")
    z = RatFunc.var(universe, "z")
    weights = RatFunc.const(universe, 1)
    for a in alphas:
        weights = weights * (1 + y * z / a) / (1 - z / a)
    core = Fraction((-1) ** (u - 1), u) * (1 + y) ** (u - 1) \
        / (z * (z - 1) ** u)
    return core * weights


def check_residue_form(alphas: Sequence[Fraction], n_order: int) -> bool:
    """Residue bookkeeping for the orbit series integrand, per t-degree:

    (a) the residue at z=0 reproduces log(1 - t(1+y))/(1+y) termwise,
    (b) residues over all finite poles {0, 1, alpha_i} sum to zero,
    (c) minus the sum of residues at the alpha_i equals the exponent of the
        orbit generating series with the weights specialized numerically.
    """
    if n_order > 3:
        raise ValueError("residue check capped at N <= 3")
    alphas = [Fraction(a) for a in alphas]
    if len(set(alphas)) != len(alphas) or any(a in (0, 1) for a in alphas):
        raise ValueError("alphas must be distinct and differ from 0 and 1")
    universe = VarUniverse(("y", "z"))
    y = RatFunc.var(universe, "y")
    for u in range(1, n_order + 1):
        f = residue_form_factor(universe, alphas, u)
        res0 = residue_at(f, "z", Fraction(0))
        res1 = residue_at(f, "z", Fraction(1))
        res_alpha = [residue_at(f, "z", a) for a in alphas]
        # (a) z=0 residue: t^u coefficient of log(1 - t(1+y))/(1+y)
        expect0 = Fraction(-1, u) * (1 + y) ** (u - 1)
        if res0 != expect0:
            return False
        # (b) total residue over the finite poles vanishes
        total = res0 + res1
        for r in res_alpha:
            total = total + r
        if not total.is_zero():
            return False
        # (c) -sum of weight-pole residues = exponent of the orbit series
        expect = RatFunc.const(universe, 0)
        for a in alphas:
            lam = RatFunc.const(universe, 1)
            for b in alphas:
                if b != a:
                    lam = lam * (1 + (a / b) * y) / (1 - a / b)
            expect = expect + Fraction((-1) ** (u - 1), u) \
                * ((1 + y) / (a - 1)) ** u * lam
        acc = RatFunc.const(universe, 0)
        for r in res_alpha:
            acc = acc + r
        if -acc != expect:
            return False
    return True
