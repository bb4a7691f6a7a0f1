"""Truncated power series in one variable (``t``) and two variables."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .polynomial import UniPoly, _normalize


class TruncatedSeries:
    """Power series known modulo ``t**(order + 1)``.

    ``coeffs[k]`` is the coefficient of ``t**k`` for ``0 <= k <= order``.
    Binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        c = [_normalize(x) for x in coeffs][: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls((c,), order)

    @classmethod
    def variable(cls, order: int) -> TruncatedSeries:
        return cls((0, 1), order)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Rational):
            return TruncatedSeries((other,), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries((self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            x = a[i]
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return TruncatedSeries((Fraction(c) / other for c in self.coeffs), self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries((1,), self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> TruncatedSeries:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        a = self.coeffs
        inv0 = Fraction(1) / c0
        out = [inv0]
        for k in range(1, n + 1):
            s = 0
            for j in range(1, k + 1):
                if a[j]:
                    s += a[j] * out[k - j]
            out.append(-s * inv0)
        return TruncatedSeries(out, n)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """``self(inner(t))``; ``inner`` must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        acc = TruncatedSeries((), n)
        for c in reversed(self.coeffs[: n + 1]):
            acc = acc * inner + c
        return acc

    def t_derivative(self) -> TruncatedSeries:
        """``t * d/dt``."""
        return TruncatedSeries((k * c for k, c in enumerate(self.coeffs)), self.order)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def evaluate_poly_at_series(p: UniPoly, s: TruncatedSeries) -> TruncatedSeries:
    acc = TruncatedSeries((), s.order)
    for c in reversed(p.coeffs):
        acc = acc * s + c
    return acc


class BiSeries:
    """Bivariate power series truncated at a total degree.

    Stored sparsely as ``{(i, j): c}`` for ``i + j <= degree`` and ``c != 0``.
    ``vars`` is a tag such as ``("x", "y")`` or ``("p", "q")``.
    """

    __slots__ = ("terms", "degree", "vars")

    def __init__(self, terms: Mapping[tuple[int, int], object], degree: int,
                 vars: tuple[str, str] = ("x", "y")):
        clean = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in BiSeries")
            if i + j <= degree and c != 0:
                clean[(i, j)] = _normalize(c)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "vars", tuple(vars))

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @classmethod
    def constant(cls, c, degree: int, vars=("x", "y")) -> BiSeries:
        return cls({(0, 0): c}, degree, vars)

    @classmethod
    def first(cls, degree: int, vars=("x", "y")) -> BiSeries:
        return cls({(1, 0): 1}, degree, vars)

    @classmethod
    def second(cls, degree: int, vars=("x", "y")) -> BiSeries:
        return cls({(0, 1): 1}, degree, vars)

    def __getitem__(self, key: tuple[int, int]):
        return self.terms.get(key, 0)

    def truncate(self, degree: int) -> BiSeries:
        if degree > self.degree:
            raise ValueError(f"cannot raise truncation degree {self.degree} to {degree}")
        return BiSeries(self.terms, degree, self.vars)

    def _coerce(self, other):
        if isinstance(other, BiSeries):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, Rational):
            return BiSeries({(0, 0): other}, self.degree, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = min(self.degree, other.degree)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiSeries(out, d, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries({k: -c for k, c in self.terms.items()}, self.degree, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return BiSeries({k: c * other for k, c in self.terms.items()}, self.degree, self.vars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = min(self.degree, other.degree)
        out: dict = {}
        b_items = sorted(other.terms.items(), key=lambda kv: kv[0][0] + kv[0][1])
        for (i1, j1), c1 in self.terms.items():
            room = d - i1 - j1
            if room < 0:
                continue
            for (i2, j2), c2 in b_items:
                if i2 + j2 > room:
                    break
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiSeries(out, d, self.vars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = BiSeries({(0, 0): 1}, self.degree, self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> BiSeries:
        c0 = self.terms.get((0, 0), 0)
        if c0 == 0:
            raise ZeroDivisionError("bivariate series with zero constant term is not invertible")
        # 1/(c0 (1 - u)) = (1/c0) sum u^k with u of positive valuation.
        u = BiSeries({k: -Fraction(c) / c0 for k, c in self.terms.items() if k != (0, 0)},
                     self.degree, self.vars)
        acc = BiSeries({(0, 0): 1}, self.degree, self.vars)
        for _ in range(self.degree):
            acc = acc * u + 1
        return acc * (Fraction(1) / c0)

    def homogeneous_degree_min(self) -> int:
        return min((i + j for i, j in self.terms), default=self.degree + 1)

    def substitute(self, first: BiSeries, second: BiSeries) -> BiSeries:
        """``self(first, second)``; both arguments must vanish at the origin.

        The result lives in the variables of the arguments.
        """
        if first.terms.get((0, 0), 0) or second.terms.get((0, 0), 0):
            raise ValueError("substituted series must have zero constant term")
        if first.vars != second.vars:
            raise ValueError("substituted series must share variables")
        d = min(self.degree, first.degree, second.degree)
        vars_ = first.vars
        # Horner in the second variable over polynomials in the first.
        first_pows = [BiSeries({(0, 0): 1}, d, vars_)]
        max_i = max((i for i, _ in self.terms), default=0)
        for _ in range(max_i):
            first_pows.append(first_pows[-1] * first)
        by_j: dict[int, dict] = {}
        for (i, j), c in self.terms.items():
            by_j.setdefault(j, {})[i] = c
        max_j = max(by_j, default=0)
        acc = BiSeries({}, d, vars_)
        for j in range(max_j, -1, -1):
            col = BiSeries({}, d, vars_)
            for i, c in by_j.get(j, {}).items():
                col = col + first_pows[i] * c
            acc = acc * second + col
        return acc

    def swap(self) -> BiSeries:
        return BiSeries({(j, i): c for (i, j), c in self.terms.items()}, self.degree, self.vars)

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            return (self.degree == other.degree and self.vars == other.vars
                    and self.terms == other.terms)
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        body = dict(sorted(self.terms.items()))
        return f"BiSeries({body!r}, degree={self.degree}, vars={self.vars!r})"
