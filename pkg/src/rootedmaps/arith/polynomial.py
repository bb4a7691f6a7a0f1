"""Dense univariate polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _normalize(x):
    # Integral Fractions become ints so equal polynomials hash alike.
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class UniPoly:
    """Polynomial ``sum(c[k] * var**k)`` with ``int`` or ``Fraction`` coefficients.

    Instances are immutable. The zero polynomial has an empty coefficient
    tuple and degree ``-1``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "T"):
        object.__setattr__(self, "coeffs", _trim(_normalize(c) for c in coeffs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c, var: str = "T") -> UniPoly:
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "T") -> UniPoly:
        return cls([0] * k + [c], var)

    @classmethod
    def linear_factor(cls, a, var: str = "T") -> UniPoly:
        """``var - a``."""
        return cls((-a, 1), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, Rational):
            return UniPoly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return UniPoly((), self.var)
            return UniPoly((c * other for c in self.coeffs), self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return UniPoly(poly_mul(self.coeffs, other.coeffs), self.var)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        return UniPoly((Fraction(c) / scalar for c in self.coeffs), self.var)

    def __pow__(self, e: int) -> UniPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly((1,), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _trim((_normalize(other),))
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly((k * c for k, c in enumerate(self.coeffs) if k), self.var)

    def antiderivative(self) -> UniPoly:
        """Antiderivative with zero constant term."""
        return UniPoly([0] + [Fraction(c, k + 1) for k, c in enumerate(self.coeffs)], self.var)

    def divmod(self, divisor: UniPoly) -> tuple[UniPoly, UniPoly]:
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = divisor.coeffs
        lead = Fraction(d[-1])
        dq = len(rem) - len(d)
        if dq < 0:
            return UniPoly((), self.var), self
        quot = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            q = rem[k + len(d) - 1] / lead
            quot[k] = q
            if q:
                for i, c in enumerate(d):
                    rem[k + i] -= q * c
        return UniPoly(quot, self.var), UniPoly(rem[: len(d) - 1], self.var)

    def __floordiv__(self, divisor):
        return self.divmod(divisor)[0]

    def __mod__(self, divisor):
        return self.divmod(divisor)[1]

    def divide_linear(self, a) -> tuple[UniPoly, object]:
        """Synthetic division by ``var - a``; returns (quotient, remainder)."""
        if not self.coeffs:
            return self, 0
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
            out.append(acc)
        rem = out.pop()
        return UniPoly(reversed(out), self.var), rem

    def taylor_shift(self, a) -> UniPoly:
        """Coefficients of ``p(a + u)`` as a polynomial in ``u``."""
        c = list(self.coeffs)
        n = len(c)
        if a == 0 or n == 0:
            return UniPoly(c, self.var)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                c[k] += a * c[k + 1]
        return UniPoly(c, self.var)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*{self.var}")
            else:
                terms.append(f"{c}*{self.var}^{k}")
        return " + ".join(terms)


def poly_mul(a: Sequence, b: Sequence) -> list:
    """Schoolbook product of two dense coefficient sequences."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_add_into(acc: list, b: Sequence, scale=1, shift: int = 0) -> None:
    """In place ``acc += scale * var**shift * b``, growing ``acc`` as needed."""
    need = len(b) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(b):
        if c:
            acc[k + shift] += scale * c
