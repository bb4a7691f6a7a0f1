from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootedmaps.arith import (
    BiSeries,
    PartialFractionForm,
    RationalFunction,
    TruncatedSeries,
    UniPoly,
    pack,
    pf_apply_D,
    pf_expand_in_t,
    pf_integrate_from_1,
    t_series,
    unpack,
)
from rootedmaps.errors import LogTermPresent, PoleAtOne, UnsupportedRoot

T = UniPoly.monomial(1)
small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small, max_size=5).map(UniPoly)
roots = st.sampled_from([0, 1, 2, -2])


# polynomials

@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniPoly()


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_poly_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, small)
def test_poly_evaluation_and_shift(p, x):
    assert p.taylor_shift(x)(0) == p(x)
    q, r = p.divide_linear(x)
    assert q * UniPoly.linear_factor(x) + r == p
    assert r == p(x)


@given(polys)
def test_antiderivative_inverts_derivative(p):
    assert p.antiderivative().derivative() == p


def test_poly_normalizes_fractions():
    p = UniPoly([Fraction(4, 2), Fraction(0), 0])
    assert p.coeffs == (2,)
    assert type(p.coeffs[0]) is int
    assert p.degree == 0
    assert UniPoly().degree == -1


def test_poly_is_immutable():
    p = UniPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


# truncated series

series = st.lists(small, min_size=1, max_size=6).map(lambda c: TruncatedSeries(c, 5))


@given(series, series, series)
def test_series_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(series.filter(lambda s: s[0] != 0))
def test_series_inverse(s):
    assert s * s.inverse() == TruncatedSeries.constant(1, 5)


def test_series_truncates_to_smaller_order():
    a = TruncatedSeries([1, 1, 1, 1], 3)
    b = TruncatedSeries([1, 1], 1)
    assert (a * b).order == 1


def test_t_series_solves_defining_equation():
    order = 30
    s = t_series(order)
    t = TruncatedSeries.variable(order)
    assert s == 1 + t * s * s * 3
    assert list(s)[:4] == [1, 3, 18, 135]


# bivariate series

bis = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=6
).map(lambda d: BiSeries(d, 5))


@given(bis, bis, bis)
def test_biseries_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(bis)
def test_biseries_identity_substitution(a):
    x = BiSeries.first(5)
    y = BiSeries.second(5)
    assert a.substitute(x, y) == a
    assert a.substitute(y, x) == a.swap()


def test_biseries_inverse():
    d = BiSeries({(0, 0): 1, (1, 0): -4, (1, 1): 3}, 6)
    assert d * d.inverse() == BiSeries.constant(1, 6)
    assert d ** -2 * d ** 2 == BiSeries.constant(1, 6)


# packing

@given(st.lists(st.integers(0, 2 ** 24 - 1), max_size=8))
def test_pack_round_trip(coeffs):
    assert unpack(pack(coeffs, 24), 24, len(coeffs)) == coeffs


def test_pack_rejects_out_of_range():
    with pytest.raises(ValueError):
        pack([-1], 8)
    with pytest.raises(ValueError):
        pack([256], 8)
    with pytest.raises(OverflowError):
        unpack(pack([1, 2, 3], 8), 8, 2)


# partial fractions

def _random_rational(draw_numer, den):
    return RationalFunction(UniPoly(draw_numer), den)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, max_size=7),
       st.dictionaries(roots, st.integers(0, 4), max_size=4))
def test_partial_fraction_round_trip(numer, den):
    f = _random_rational(numer, den)
    pf = PartialFractionForm.from_rational(f)
    assert pf.to_rational() == f
    for x in (Fraction(1, 3), Fraction(-7, 5), Fraction(11, 2)):
        assert pf(x) == f(x)
    for a in pf.roots():
        assert pf.pole_order(a) <= den.get(a, 0)


@settings(max_examples=60, deadline=None)
@given(polys, st.dictionaries(st.tuples(st.sampled_from([0, 2, -2]), st.integers(2, 5)), small, max_size=4))
def test_integrate_then_differentiate(poly, poles):
    f = PartialFractionForm(poly, poles)
    F = pf_integrate_from_1(f)
    assert F.derivative() == f
    assert F(1) == 0


@settings(max_examples=40, deadline=None)
@given(polys, st.dictionaries(st.tuples(st.sampled_from([0, 2, -2]), st.integers(1, 4)), small, max_size=4))
def test_D_matches_series_derivative(poly, poles):
    # D is t d/dt once T = T(t) is substituted
    f = PartialFractionForm(poly, poles)
    order = 8
    assert pf_expand_in_t(pf_apply_D(f), order) == pf_expand_in_t(f, order).t_derivative()


def test_apply_D_examples():
    assert pf_apply_D(PartialFractionForm.constant(5)).is_zero()
    d = pf_apply_D(PartialFractionForm.from_poly(T))
    assert d.poly == UniPoly([-1, -1])
    assert d.poles == {(2, 1): -2}


def test_apply_D_of_simple_pole():
    d = pf_apply_D(PartialFractionForm.pole(2, 1))
    # T(1-T)/(T-2) * d/dT (T-2)^-1 = (T^2 - T)/(T-2)^3 and T^2 - T = (T-2)^2 + 3(T-2) + 2
    assert d.poles == {(2, 1): 1, (2, 2): 3, (2, 3): 2}
    for x in (Fraction(1, 3), Fraction(5), Fraction(-3, 7)):
        assert d(x) == (x * x - x) / (x - 2) ** 3


def test_integrate_examples():
    assert pf_integrate_from_1(PartialFractionForm()).is_zero()
    F = pf_integrate_from_1(PartialFractionForm.pole(2, 2))
    assert F == PartialFractionForm(UniPoly([-1]), {(2, 1): -1})
    F = pf_integrate_from_1(PartialFractionForm.from_poly(T * 2))
    assert F == PartialFractionForm.from_poly(T * T - 1)


def test_integrate_rejects_log_and_pole_at_one():
    with pytest.raises(LogTermPresent):
        pf_integrate_from_1(PartialFractionForm.pole(-2, 1))
    with pytest.raises(PoleAtOne):
        pf_integrate_from_1(PartialFractionForm.pole(1, 2))


def test_unsupported_root():
    with pytest.raises(UnsupportedRoot):
        PartialFractionForm.pole(3, 1)
    with pytest.raises(UnsupportedRoot):
        RationalFunction(UniPoly([1]), {5: 1})


def test_expand_in_t_examples():
    assert list(pf_expand_in_t(PartialFractionForm.constant(7), 3)) == [7, 0, 0, 0]
    assert list(pf_expand_in_t(PartialFractionForm.from_poly(T), 3)) == [1, 3, 18, 135]
    r0 = PartialFractionForm.from_poly(T * (4 - T) / 3)
    assert list(pf_expand_in_t(r0, 3)) == [1, 2, 9, 54]


def test_expand_pole_at_zero():
    # 1/T = 1 - 3tT
    s = pf_expand_in_t(PartialFractionForm.pole(0, 1), 6)
    assert s == 1 - TruncatedSeries.variable(6) * t_series(6) * 3
