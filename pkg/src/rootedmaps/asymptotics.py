"""Asymptotic constants ``Q_g^n ~ t_g n^(5(g-1)/2) 12^n``.

``tau_g = (5g - 3) alpha_{5g-3} = 2^(5g-2) Gamma((5g-1)/2) t_g`` satisfies

    tau_g = (5g-4)(5g-6)/3 * tau_{g-1} + 1/2 sum_{h=1}^{g-1} tau_h tau_{g-h}

with ``tau_1 = 1/3``. ``t_g`` is kept exact as a rational times a power
of pi (``Gamma`` at a half-integer contributes a ``sqrt(pi)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from .errors import MissingLeadingPole
from .genus_series import rg_report
from .recurrences import q_count


@dataclass(frozen=True)
class SqrtPiScalar:
    """``rational * pi**pi_exponent`` with ``pi_exponent`` in ``{0, -1/2}``."""

    rational: Fraction
    pi_exponent: Fraction = Fraction(0)

    def __post_init__(self):
        if self.pi_exponent not in (0, Fraction(-1, 2)):
            raise ValueError("pi exponent must be 0 or -1/2")

    def to_mpf(self, digits: int = 30):
        with mpmath.workdps(digits + 5):
            v = mpmath.mpf(self.rational.numerator) / self.rational.denominator
            if self.pi_exponent:
                v = v / mpmath.sqrt(mpmath.pi)
            return +v

    def decimal(self, digits: int = 30) -> str:
        with mpmath.workdps(digits + 5):
            return mpmath.nstr(self.to_mpf(digits), digits)

    def __str__(self):
        r = self.rational
        if not self.pi_exponent:
            return str(r)
        if r.denominator == 1:
            return f"{r.numerator}/sqrt(pi)"
        return f"{r.numerator}/({r.denominator}*sqrt(pi))"


def gamma_half(twice_z: int) -> tuple[Fraction, Fraction]:
    """``Gamma(twice_z / 2)`` as ``(rational, pi_exponent)`` for ``twice_z >= 1``."""
    if twice_z < 1:
        raise ValueError("argument must be positive")
    if twice_z % 2 == 0:
        return Fraction(factorial(twice_z // 2 - 1)), Fraction(0)
    m = (twice_z - 1) // 2
    # Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi)
    return Fraction(factorial(2 * m), 4 ** m * factorial(m)), Fraction(1, 2)


_tau_cache: list[Fraction] = [Fraction(0), Fraction(1, 3)]


def tau(g: int) -> Fraction:
    if g < 1:
        raise ValueError("tau is defined for g >= 1")
    while len(_tau_cache) <= g:
        k = len(_tau_cache)
        value = Fraction((5 * k - 4) * (5 * k - 6), 3) * _tau_cache[k - 1]
        value += Fraction(1, 2) * sum(_tau_cache[h] * _tau_cache[k - h] for h in range(1, k))
        _tau_cache.append(value)
    return _tau_cache[g]


def tau_from_rg(g: int) -> Fraction:
    """``(5g - 3) * alpha_{5g-3}`` read off the computed ``R_g``."""
    if g < 1:
        raise ValueError("tau is defined for g >= 1")
    alpha = rg_report(g).alpha
    lead = alpha[5 * g - 4] if len(alpha) >= 5 * g - 3 else 0
    if lead == 0:
        raise MissingLeadingPole(g)
    return (5 * g - 3) * lead


def tg(g: int) -> SqrtPiScalar:
    """``t_g = tau_g / (2^(5g-2) Gamma((5g-1)/2))``."""
    gr, gp = gamma_half(5 * g - 1)
    return SqrtPiScalar(tau(g) / (2 ** (5 * g - 2) * gr), -gp)


def tg_from_alpha(g: int, alpha: Fraction) -> SqrtPiScalar:
    """``t_g = alpha_{5g-3} / (2^(5g-3) Gamma((5g-3)/2))``."""
    gr, gp = gamma_half(5 * g - 3)
    return SqrtPiScalar(Fraction(alpha) / (2 ** (5 * g - 3) * gr), -gp)


def asymptotic_ratio(g: int, n: int, digits: int = 30) -> float:
    """``Q_g^n / (t_g n^(5(g-1)/2) 12^n)`` rendered as a float."""
    if g < 1:
        raise ValueError("asymptotic_ratio needs g >= 1 (t_0 is not defined)")
    if n < 1:
        raise ValueError("n must be >= 1")
    q = q_count(g, n)
    with mpmath.workdps(digits + 10):
        denom = tg(g).to_mpf(digits + 10) * mpmath.power(n, mpmath.mpf(5 * (g - 1)) / 2) * mpmath.power(12, n)
        return float(mpmath.mpf(q) / denom)


def tau_table() -> list[Fraction]:
    """Computed ``tau_1, tau_2, ...`` in order."""
    return list(_tau_cache[1:])


def load_tau_table(values: list[Fraction]) -> None:
    for g, v in enumerate(values, start=1):
        if g < len(_tau_cache):
            if _tau_cache[g] != v:
                raise ValueError(f"cached tau_{g} = {v} disagrees with {_tau_cache[g]}")
        else:
            _tau_cache.append(Fraction(v))
