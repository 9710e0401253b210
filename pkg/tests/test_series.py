"""Tests for truncated series, the generating-series checks, and residues."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confchern.laurent import RatFunc, VarUniverse, ZeroDenominatorError
from confchern.series import (PoleOrderError, TruncSeries,
                              check_orbit_full_series, check_orbit_series,
                              check_partition_exp_identity, check_point_series,
                              check_point_series_ambient, check_residue_form,
                              orbit_full_series, orbit_series_sides,
                              residue_at, residue_form_factor)

U = VarUniverse(("c", "y"))


def c_rf(x):
    return RatFunc.const(U, x)


def test_series_product_example():
    t = TruncSeries.t(U, 2)
    assert (1 + t) * (1 - t) == TruncSeries(U, 2, [c_rf(1), c_rf(0), c_rf(-1)])


def test_series_additive_identity():
    a = TruncSeries(U, 3, [c_rf(2), RatFunc.var(U, "c")])
    assert a + TruncSeries.const(U, 3, 0) == a


def test_exp_product_inverse():
    t = TruncSeries.t(U, 4)
    assert t.exp() * (-t).exp() == 1


def test_exp_values():
    t = TruncSeries.t(U, 3)
    e = t.exp()
    assert e.coeffs[0] == 1
    assert e.coeffs[2] == Fraction(1, 2)
    assert e.coeffs[3] == Fraction(1, 6)
    ct = TruncSeries.const(U, 3, RatFunc.var(U, "c")) * t
    assert ct.exp().coeffs[2] == RatFunc.var(U, "c") ** 2 * Fraction(1, 2)


def test_log_values():
    t = TruncSeries.t(U, 3)
    lg = t.log1p()
    assert lg.coeffs[1] == 1
    assert lg.coeffs[2] == Fraction(-1, 2)
    assert lg.coeffs[3] == Fraction(1, 3)
    assert lg.exp() == 1 + t


def test_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        TruncSeries.const(U, 2, 1).exp()
    with pytest.raises(ValueError):
        TruncSeries.const(U, 2, 1).log1p()


def test_order_mismatch():
    with pytest.raises(ValueError):
        TruncSeries.t(U, 2) + TruncSeries.t(U, 3)


_small = st.fractions(min_value=-3, max_value=3, max_denominator=2)


@st.composite
def zero_const_series(draw, order=4):
    coeffs = [c_rf(0)]
    for _ in range(order):
        val = c_rf(draw(_small))
        if draw(st.booleans()):
            val = val * RatFunc.var(U, "c")
        coeffs.append(val)
    return TruncSeries(U, order, coeffs)


@settings(max_examples=25, deadline=None)
@given(zero_const_series())
def test_exp_log_inverse_laws(a):
    assert a.log1p().exp() == 1 + a
    assert (a.exp() - 1).log1p() == a


@settings(max_examples=25, deadline=None)
@given(zero_const_series(), zero_const_series())
def test_exp_homomorphism(a, b):
    assert (a + b).exp() == a.exp() * b.exp()


# -- generating-series checks ------------------------------------------------

@pytest.mark.parametrize("n_order", (1, 2, 3, 4))
def test_partition_exp_identity_small(n_order):
    assert check_partition_exp_identity(n_order)


@pytest.mark.parametrize("n_order", (1, 2, 3, 4))
def test_point_series_small(n_order):
    assert check_point_series(n_order)
    assert check_point_series_ambient(n_order)


def test_point_series_t2_coefficient():
    # direct hand value of the t^2 coefficient: (m^2 - m e)/2
    universe = VarUniverse(("m", "e"))
    m = RatFunc.var(universe, "m")
    e = RatFunc.var(universe, "e")
    from confchern.partitions import coefficient_a, enumerate_partitions
    coeff = RatFunc.const(universe, 0)
    for p in enumerate_partitions(2):
        coeff = coeff + coefficient_a(p) * m ** len(p) * e ** (2 - len(p))
    assert Fraction(1, 2) * coeff == Fraction(1, 2) * (m ** 2 - m * e)


def test_orbit_series_t1_n1():
    lhs, rhs = orbit_series_sides(1, 1)
    u = lhs.universe
    want = (1 + RatFunc.var(u, "y")) / (RatFunc.var(u, "a1") - 1)
    assert lhs.coeffs[1] == want
    assert rhs.coeffs[1] == want


@pytest.mark.parametrize("n,N", [(1, 2), (2, 2)])
def test_orbit_series_small(n, N):
    assert check_orbit_series(n, N)


def test_orbit_series_caps():
    with pytest.raises(ValueError):
        check_orbit_series(4, 2)


@pytest.mark.parametrize("n,N", [(1, 2), (2, 2)])
def test_orbit_full_series_small(n, N):
    assert check_orbit_full_series(n, N)


def test_orbit_full_literal_derivative_form_is_false():
    # the f + t*f' reading of the vanishing-allowed series does not hold;
    # the decomposition forces (1+t)*f instead (see check_orbit_full_series)
    f, _ = orbit_series_sides(1, 2)
    lhs = orbit_full_series(1, 2)
    derivative_form = TruncSeries(f.universe, 2,
                                  [(1 + u) * c for u, c in enumerate(f.coeffs)])
    assert lhs != derivative_form


# -- residues ----------------------------------------------------------------

ZU = VarUniverse(("y", "z"))


def _z():
    return RatFunc.var(ZU, "z")


def test_residue_simple_pole():
    f = 1 / (_z() - 2)
    assert residue_at(f, "z", Fraction(2)) == 1


def test_residue_double_pole():
    f = 1 / (_z() - 2) ** 2
    assert residue_at(f, "z", Fraction(2)) == 0


def test_residue_theorem_two_poles():
    f = 1 / (_z() * (_z() - 1))
    assert residue_at(f, "z", Fraction(0)) == -1
    assert residue_at(f, "z", Fraction(1)) == 1


def test_residue_no_pole():
    f = _z() + 3
    assert residue_at(f, "z", Fraction(1)).is_zero()


def test_residue_order_cap():
    f = 1 / (_z() - 2) ** 3
    with pytest.raises(PoleOrderError):
        residue_at(f, "z", Fraction(2), max_order=2)


def test_residue_form_factor_t1():
    # u=1: residue at z=0 is -1, matching the stated closed form
    f = residue_form_factor(ZU, [Fraction(2)], 1)
    assert residue_at(f, "z", Fraction(0)) == -1


@pytest.mark.parametrize("alphas,N", [([Fraction(2)], 2),
                                      ([Fraction(2), Fraction(3)], 2)])
def test_residue_form(alphas, N):
    assert check_residue_form(alphas, N)


def test_residue_form_rejects_bad_alphas():
    with pytest.raises(ValueError):
        check_residue_form([Fraction(1), Fraction(2)], 1)
    with pytest.raises(ValueError):
        check_residue_form([Fraction(2), Fraction(2)], 1)
    with pytest.raises(ValueError):
        check_residue_form([Fraction(2)], 5)
