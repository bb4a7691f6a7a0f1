"""Fixed-genus generating functions as rational functions of ``T``.

``Q_g(t) = R_g(T)`` where ``T = 1 + 3 t T**2``. ``R_0 = T(4 - T)/3`` and,
for ``g >= 1``,

    d/dT [ (T-1)(T+2)/(3T) * R_g ]
        = (T-1)^2/(18 T^4) * (2D+1)(2D+2)(2D+3) R_{g-1}
        + (T-1)^2/(3 T^4) * sum_{i+j=g, i,j>=1} (2D+1)R_i * (2D+1)R_j

with ``D = T(1-T)/(T-2) d/dT``. Integrating from ``T = 1`` (where the
bracket vanishes) and dividing out the prefactor gives ``R_g``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    PartialFractionForm,
    RationalFunction,
    TruncatedSeries,
    UniPoly,
    pf_apply_D,
    pf_expand_in_t,
    pf_integrate_from_1,
)
from .errors import AnsatzViolation


@dataclass(frozen=True)
class GenusSeriesRecord:
    g: int
    form: PartialFractionForm
    pole_order_at_2: int
    pole_order_at_minus_2: int
    constant_part: Fraction

    @classmethod
    def from_form(cls, g: int, form: PartialFractionForm) -> GenusSeriesRecord:
        return cls(g, form, form.pole_order(2), form.pole_order(-2), Fraction(form.poly[0]))

    def expand(self, order: int) -> TruncatedSeries:
        return pf_expand_in_t(self.form, order)


@dataclass(frozen=True)
class GenusReport:
    """Pole data in the ``(2 - T)**-i`` / ``(T + 2)**-i`` convention."""

    g: int
    c0: Fraction
    alpha: list[Fraction] = field(default_factory=list)  # alpha[i-1] = alpha_i
    beta: list[Fraction] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "c0": str(self.c0),
            "alpha": [str(a) for a in self.alpha],
            "beta": [str(b) for b in self.beta],
        }


def _twoD_plus(f: PartialFractionForm, c: int) -> PartialFractionForm:
    return pf_apply_D(f) * 2 + f * c


class GenusSeries:
    """Memoized ``R_g`` computation."""

    def __init__(self):
        self._lock = threading.RLock()
        self._records: dict[int, GenusSeriesRecord] = {}
        self._weighted: dict[int, PartialFractionForm] = {}  # (2D+1) R_g

    def r0(self) -> GenusSeriesRecord:
        rec = self._records.get(0)
        if rec is None:
            form = PartialFractionForm(UniPoly((0, Fraction(4, 3), Fraction(-1, 3))))
            rec = GenusSeriesRecord.from_form(0, form)
            self._records[0] = rec
        return rec

    def _weighted_form(self, g: int) -> PartialFractionForm:
        w = self._weighted.get(g)
        if w is None:
            w = _twoD_plus(self.rg(g).form, 1)
            self._weighted[g] = w
        return w

    def rg(self, g: int) -> GenusSeriesRecord:
        if g < 0:
            raise ValueError("genus must be >= 0")
        if g == 0:
            return self.r0()
        with self._lock:
            rec = self._records.get(g)
            if rec is not None:
                return rec
            for h in range(1, g):
                self.rg(h)
            rec = self._compute(g)
            self._records[g] = rec
            return rec

    def _compute(self, g: int) -> GenusSeriesRecord:
        prev = self.rg(g - 1).form
        # (2D+1)(2D+2)(2D+3) applied right to left.
        chain = _twoD_plus(_twoD_plus(_twoD_plus(prev, 3), 2), 1)
        # (T - 1)^2 / T^4 as a rational function.
        lead = RationalFunction(UniPoly((1, -2, 1)), {0: 4})
        rhs = chain.to_rational() * lead * Fraction(1, 18)
        products = None
        for i in range(1, g):
            j = g - i
            if j < i:
                break
            term = self._weighted_form(i).to_rational() * self._weighted_form(j).to_rational()
            if i != j:
                term = term * 2
            products = term if products is None else products + term
        if products is not None:
            rhs = rhs + products * lead * Fraction(1, 3)
        integrand = PartialFractionForm.from_rational(rhs)
        primitive = pf_integrate_from_1(integrand)
        # R_g = 3T * primitive / ((T - 1)(T + 2))
        scaled = primitive.to_rational() * UniPoly((0, 3))
        form = PartialFractionForm.from_rational(scaled.divide_by_linear(1).divide_by_linear(-2))
        _check_ansatz(g, form)
        return GenusSeriesRecord.from_form(g, form)

    def report(self, g: int) -> GenusReport:
        rec = self.rg(g)
        if g == 0:
            return GenusReport(0, rec.constant_part)
        form = rec.form
        alpha = [(-1) ** i * Fraction(form.coefficient(2, i)) for i in range(1, 5 * g - 2)]
        beta = [Fraction(form.coefficient(-2, i)) for i in range(1, 3 * g - 1)]
        return GenusReport(g, rec.constant_part, alpha, beta)

    def export_state(self) -> dict:
        return {g: rec.form for g, rec in sorted(self._records.items())}

    def import_state(self, forms: dict) -> None:
        with self._lock:
            for g, form in forms.items():
                self._records[g] = GenusSeriesRecord.from_form(g, form)


def _check_ansatz(g: int, form: PartialFractionForm) -> None:
    for a in form.roots():
        if a not in (2, -2):
            raise AnsatzViolation(g, a, form.pole_order(a))
    if form.pole_order(2) > 5 * g - 3:
        raise AnsatzViolation(g, 2, form.pole_order(2))
    if form.pole_order(-2) > 3 * g - 2:
        raise AnsatzViolation(g, -2, form.pole_order(-2))
    if form.poly.degree > 0:
        raise AnsatzViolation(g, "infinity", form.poly.degree)


_default = GenusSeries()


def default_genus_series() -> GenusSeries:
    return _default


def r0() -> GenusSeriesRecord:
    return _default.r0()


def rg(g: int) -> GenusSeriesRecord:
    """``R_g`` with its pole data."""
    return _default.rg(g)


def rg_report(g: int) -> GenusReport:
    return _default.report(g)


def series_coefficients(g: int, order: int) -> list:
    """``[t^n] Q_g(t)`` for ``n <= order``, via ``R_g``."""
    return list(rg(g).expand(order))
