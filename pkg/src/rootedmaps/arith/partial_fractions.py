"""Rational functions of ``T`` whose denominators split over a fixed root set.

Two representations are used:

* :class:`RationalFunction` -- ``numerator / prod((T - a)**e_a)``, convenient
  for products and for multiplying by explicit prefactors;
* :class:`PartialFractionForm` -- ``poly(T) + sum(gamma[a, k] / (T - a)**k)``,
  convenient for differentiation, integration and reading off pole data.

Only the roots in :data:`ROOTS` may appear in a denominator. Pole terms use
monic factors ``(T - a)``; conversion to other sign conventions is left to
callers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import LogTermPresent, PoleAtOne, UnsupportedRoot
from .polynomial import UniPoly, _normalize
from .series import TruncatedSeries, evaluate_poly_at_series

ROOTS = (0, 1, 2, -2)


def _check_root(a) -> None:
    if a not in ROOTS:
        raise UnsupportedRoot(f"root {a} is outside the supported set {ROOTS}")


class RationalFunction:
    """``numerator / prod((T - a)**den[a])`` with ``a`` in :data:`ROOTS`.

    The constructor cancels every common linear factor, so the stored
    denominator exponents are minimal.
    """

    __slots__ = ("numerator", "den")

    def __init__(self, numerator: UniPoly, den: Mapping[int, int] | None = None):
        den = {a: e for a, e in (den or {}).items() if e}
        for a, e in den.items():
            _check_root(a)
            if e < 0:
                raise ValueError("negative denominator exponent")
        num = numerator if isinstance(numerator, UniPoly) else UniPoly(numerator)
        if num.is_zero():
            den = {}
        else:
            for a in list(den):
                while den[a]:
                    q, r = num.divide_linear(a)
                    if r != 0:
                        break
                    num = q
                    den[a] -= 1
                if not den[a]:
                    del den[a]
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "den", dict(sorted(den.items())))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, p: UniPoly) -> RationalFunction:
        return cls(p, {})

    def denominator_poly(self) -> UniPoly:
        d = UniPoly((1,))
        for a, e in self.den.items():
            d = d * UniPoly.linear_factor(a) ** e
        return d

    def _lift(self, den: Mapping[int, int]) -> UniPoly:
        """Numerator over the (larger) denominator ``den``."""
        num = self.numerator
        for a, e in den.items():
            extra = e - self.den.get(a, 0)
            if extra:
                num = num * UniPoly.linear_factor(a) ** extra
        return num

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(UniPoly((other,)) if not isinstance(other, UniPoly) else other)
        den = dict(self.den)
        for a, e in other.den.items():
            den[a] = max(den.get(a, 0), e)
        return RationalFunction(self._lift(den) + other._lift(den), den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RationalFunction) else -other)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            den = dict(self.den)
            for a, e in other.den.items():
                den[a] = den.get(a, 0) + e
            return RationalFunction(self.numerator * other.numerator, den)
        return RationalFunction(self.numerator * other, self.den)

    __rmul__ = __mul__

    def divide_by_linear(self, a, power: int = 1) -> RationalFunction:
        den = dict(self.den)
        den[a] = den.get(a, 0) + power
        return RationalFunction(self.numerator, den)

    def __call__(self, x):
        d = self.denominator_poly()(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at T={x}")
        return Fraction(self.numerator(x)) / d

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.numerator == other.numerator and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, tuple(self.den.items())))

    def __repr__(self):
        return f"RationalFunction({self.numerator!r}, {self.den!r})"


class PartialFractionForm:
    """``poly(T) + sum(gamma[(a, k)] / (T - a)**k)``.

    ``poles`` maps ``(root, order)`` with ``order >= 1`` to a nonzero
    rational coefficient.
    """

    __slots__ = ("poly", "poles")

    def __init__(self, poly: UniPoly | None = None, poles: Mapping[tuple[int, int], object] | None = None):
        poly = poly if poly is not None else UniPoly(())
        if poly.var != "T":
            raise ValueError("partial fraction forms live in the variable T")
        clean = {}
        for (a, k), c in (poles or {}).items():
            _check_root(a)
            if k < 1:
                raise ValueError("pole order must be >= 1")
            if c != 0:
                clean[(a, k)] = _normalize(c)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "poles", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("PartialFractionForm is immutable")

    @classmethod
    def constant(cls, c) -> PartialFractionForm:
        return cls(UniPoly((c,)))

    @classmethod
    def from_poly(cls, p: UniPoly) -> PartialFractionForm:
        return cls(p)

    @classmethod
    def pole(cls, a, k: int, c=1) -> PartialFractionForm:
        return cls(None, {(a, k): c})

    def is_zero(self) -> bool:
        return self.poly.is_zero() and not self.poles

    def pole_order(self, a) -> int:
        return max((k for (r, k) in self.poles if r == a), default=0)

    def coefficient(self, a, k: int):
        return self.poles.get((a, k), 0)

    def roots(self) -> set:
        return {a for a, _ in self.poles}

    # -- conversions ---------------------------------------------------

    @classmethod
    def from_rational(cls, f: RationalFunction) -> PartialFractionForm:
        """Exact partial-fraction decomposition over :data:`ROOTS`."""
        if not isinstance(f, RationalFunction):
            raise TypeError("expected a RationalFunction")
        if not f.den:
            return cls(f.numerator)
        quot, rem = f.numerator.divmod(f.denominator_poly())
        poles = {}
        for a, e in f.den.items():
            # Laurent expansion of rem / den at T = a, with u = T - a.
            order = e - 1
            top = TruncatedSeries(rem.taylor_shift(a).coeffs, order)
            other = TruncatedSeries((1,), order)
            for b, eb in f.den.items():
                if b != a:
                    other = other * TruncatedSeries((a - b, 1), order) ** eb
            local = top * other.inverse()
            for j in range(e):
                poles[(a, e - j)] = local[j]
        return cls(quot, poles)

    def to_rational(self) -> RationalFunction:
        den: dict = {}
        for a, k in self.poles:
            den[a] = max(den.get(a, 0), k)
        full = UniPoly((1,))
        for a, e in den.items():
            full = full * UniPoly.linear_factor(a) ** e
        num = self.poly * full
        for (a, k), c in self.poles.items():
            part = UniPoly((c,))
            for b, e in den.items():
                p = e - k if b == a else e
                if p:
                    part = part * UniPoly.linear_factor(b) ** p
            num = num + part
        return RationalFunction(num, den)

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PartialFractionForm):
            if isinstance(other, UniPoly):
                other = PartialFractionForm(other)
            else:
                other = PartialFractionForm.constant(other)
        poles = dict(self.poles)
        for key, c in other.poles.items():
            poles[key] = poles.get(key, 0) + c
        return PartialFractionForm(self.poly + other.poly, poles)

    __radd__ = __add__

    def __neg__(self):
        return PartialFractionForm(-self.poly, {k: -c for k, c in self.poles.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PartialFractionForm):
            return PartialFractionForm.from_rational(self.to_rational() * other.to_rational())
        if isinstance(other, RationalFunction):
            return PartialFractionForm.from_rational(self.to_rational() * other)
        if isinstance(other, UniPoly):
            return PartialFractionForm.from_rational(self.to_rational() * other)
        return PartialFractionForm(self.poly * other, {k: c * other for k, c in self.poles.items()})

    __rmul__ = __mul__

    def derivative(self) -> PartialFractionForm:
        poles = {(a, k + 1): -k * c for (a, k), c in self.poles.items()}
        return PartialFractionForm(self.poly.derivative(), poles)

    def __call__(self, x):
        acc = Fraction(self.poly(x))
        for (a, k), c in self.poles.items():
            if x == a:
                raise ZeroDivisionError(f"pole at T={a}")
            acc += Fraction(c) / Fraction(x - a) ** k
        return acc

    def __eq__(self, other):
        if isinstance(other, PartialFractionForm):
            return self.poly == other.poly and self.poles == other.poles
        return NotImplemented

    def __hash__(self):
        return hash((self.poly, tuple(self.poles.items())))

    def __repr__(self):
        return f"PartialFractionForm({self.poly!r}, {self.poles!r})"


# T(1 - T)/(T - 2) == -T - 1 - 2/(T - 2)
_D_FACTOR = RationalFunction(UniPoly((0, 1, -1)), {2: 1})


def pf_apply_D(f: PartialFractionForm) -> PartialFractionForm:
    """Apply ``T(1 - T)/(T - 2) * d/dT``, which is ``t d/dt`` in the ``T`` chart."""
    df = f.derivative()
    if df.is_zero():
        return df
    return PartialFractionForm.from_rational(df.to_rational() * _D_FACTOR)


def pf_integrate_from_1(f: PartialFractionForm) -> PartialFractionForm:
    """Antiderivative ``F`` of ``f`` normalized by ``F(1) = 0``.

    Raises :class:`LogTermPresent` when ``f`` has a simple pole anywhere.
    """
    for (a, k), c in f.poles.items():
        if k == 1:
            raise LogTermPresent(a, c)
    poles = {(a, k - 1): Fraction(-c) / (k - 1) for (a, k), c in f.poles.items()}
    F = PartialFractionForm(f.poly.antiderivative(), poles)
    if 1 in F.roots():
        raise PoleAtOne()
    return F - F(1)


def t_series(order: int) -> TruncatedSeries:
    """``T(t)``, the power series solution of ``T = 1 + 3 t T**2``."""
    c = [1]
    for n in range(1, order + 1):
        # [t^n] 3 t T^2 = 3 [t^(n-1)] T^2
        c.append(3 * sum(c[i] * c[n - 1 - i] for i in range(n)))
    return TruncatedSeries(c, order)


def pf_expand_in_t(f: PartialFractionForm, order: int) -> TruncatedSeries:
    """Coefficients of ``f(T(t))`` up to ``t**order``."""
    if 1 in f.roots():
        raise PoleAtOne()
    T = t_series(order)
    acc = evaluate_poly_at_series(f.poly, T)
    by_root: dict = {}
    for (a, k), c in f.poles.items():
        by_root.setdefault(a, {})[k] = c
    for a, terms in by_root.items():
        inv = (T - a).inverse()
        power = inv
        for k in range(1, max(terms) + 1):
            if k > 1:
                power = power * inv
            c = terms.get(k)
            if c:
                acc = acc + power * c
    return acc
