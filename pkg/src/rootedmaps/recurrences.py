"""Exact counting recurrences for rooted maps on orientable surfaces.

Notation:

* ``Q[g][n]`` -- rooted maps of genus ``g`` with ``n`` edges;
* ``Q_g^n(x)`` -- the same, with ``x`` marking faces;
* ``M[g][i, j]`` -- rooted maps of genus ``g`` with ``i`` vertices, ``j`` faces;
* ``eps[g][n]`` -- one-face maps (Harer-Zagier numbers);
* ``H_n(x, s)`` -- all genera at once, ``s`` marking genus.

Each recurrence divides by ``(n + 1)/6``. The tables below clear the
denominators (``12 * (n + 1)/6 = 2(n + 1)``), evaluate the right-hand side
exactly in integers, and check that the division by ``2(n + 1)`` leaves no
remainder before storing.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from operator import mul

from .arith import UniPoly, pack, unpack
from .errors import NonIntegerResult


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerResult(what, Fraction(num, den))
    return q


def _packed_convolution_bits(rows, extra_terms: int) -> int:
    top = max((c.bit_length() for row in rows for c in row), default=1)
    return 2 * top + max(extra_terms, 1).bit_length() + 2


class RecurrenceEngine:
    """Memoized tables for all five recurrences.

    Tables grow on demand and are never shrunk. A lock serializes the fill
    phase; reads of already computed entries are plain dictionary/list
    lookups.
    """

    def __init__(self):
        self._lock = threading.RLock()
        # _q[g][n] = Q_g^n, for n < len(_q[g])
        self._q: list[list[int]] = []
        # _qw[g][m] = (2m + 1) Q_g^m, the convolution operands
        self._qw: list[list[int]] = []
        # _qpoly[trunc][g][n] = coefficient list of Q_g^n(x) mod x^(trunc+1);
        # trunc None means untruncated.
        self._qpoly: dict = {}
        self._eps: list[list[int]] = []
        self._m: dict[tuple[int, int, int], int] = {}
        self._m_frontier = 0
        self._h: list[list[list[int]]] = []

    # -- Q_g^n ---------------------------------------------------------

    def _extend_q(self, g_max: int, n_max: int) -> None:
        q, weighted = self._q, self._qw
        while len(q) <= g_max:
            q.append([])
            weighted.append([])
        for g in range(g_max + 1):
            row = q[g]
            w = weighted[g]
            for n in range(len(row), n_max + 1):
                if n == 0:
                    value = 1 if g == 0 else 0
                elif 2 * g > n:
                    value = 0
                else:
                    num = 4 * (4 * n - 2) * row[n - 1]
                    if g >= 1 and n >= 2:
                        num += (2 * n - 3) * (2 * n - 2) * (2 * n - 1) * q[g - 1][n - 2]
                    num += 6 * self._q_convolution(weighted, g, n - 2)
                    value = _exact_div(num, 2 * (n + 1), f"Q_{g}^{n}")
                row.append(value)
                w.append((2 * n + 1) * value)

    @staticmethod
    def _q_convolution(weighted, g: int, total: int) -> int:
        """sum over m1 + m2 = total, i + j = g of weighted[i][m1] * weighted[j][m2]."""
        if total < 0:
            return 0
        s = 0
        for i in range(g + 1):
            j = g - i
            lo = 2 * i
            hi = total - 2 * j
            if lo > hi:
                continue
            # m1 runs over lo..hi while m2 = total - m1 runs down from total - lo.
            s += sum(map(mul, weighted[i][lo:hi + 1], weighted[j][total - hi:total - lo + 1][::-1]))
        return s

    def q_count(self, g: int, n: int) -> int:
        if g < 0 or n < 0:
            return 0
        if 2 * g > n:
            return 1 if (g, n) == (0, 0) else 0
        with self._lock:
            if len(self._q) <= g or len(self._q[g]) <= n:
                self._extend_q(g, n)
            return self._q[g][n]

    # -- Q_g^n(x) ------------------------------------------------------

    def _extend_qpoly(self, g_max: int, n_max: int, trunc: int | None) -> None:
        table = self._qpoly.setdefault(trunc, [])
        while len(table) <= g_max:
            table.append([])

        def cut(c):
            if trunc is not None:
                c = c[: trunc + 1]
            while c and c[-1] == 0:
                c.pop()
            return c

        for g in range(g_max + 1):
            row = table[g]
            for n in range(len(row), n_max + 1):
                if n == 0:
                    row.append(cut([0, 1]) if g == 0 else [])
                    continue
                if 2 * g > n:
                    row.append([])
                    continue
                acc: list[int] = []
                prev = row[n - 1]
                # 12 * (1 + x)(2n - 1)/3 * Q_g^(n-1)(x)
                c = 4 * (2 * n - 1)
                _add_shifted(acc, prev, c, 0)
                _add_shifted(acc, prev, c, 1)
                if g >= 1 and n >= 2:
                    _add_shifted(acc, table[g - 1][n - 2],
                                 (2 * n - 3) * (2 * n - 2) * (2 * n - 1), 0)
                conv = self._qpoly_convolution(table, g, n - 2)
                _add_shifted(acc, conv, 6, 0)
                acc = cut(acc)
                den = 2 * (n + 1)
                row.append([_exact_div(c, den, f"[x^{f}] Q_{g}^{n}(x)") for f, c in enumerate(acc)])

    @staticmethod
    def _qpoly_convolution(table, g: int, total: int) -> list[int]:
        if total < 0:
            return []
        pairs = []
        for i in range(g + 1):
            j = g - i
            for m1 in range(2 * i, total - 2 * j + 1):
                m2 = total - m1
                a = table[i][m1]
                b = table[j][m2]
                if a and b:
                    pairs.append(((2 * m1 + 1), a, (2 * m2 + 1), b))
        if not pairs:
            return []
        rows = [p[1] for p in pairs] + [p[3] for p in pairs]
        top = max(c.bit_length() for r in rows for c in r)
        wbits = max(abs(p[0] * p[2]) for p in pairs).bit_length()
        length = max(len(p[1]) + len(p[3]) - 1 for p in pairs)
        bits = 2 * top + wbits + (len(pairs) * length).bit_length() + 2
        total_packed = 0
        for wa, a, wb, b in pairs:
            total_packed += (wa * wb) * pack(a, bits) * pack(b, bits)
        return unpack(total_packed, bits, length)

    def q_poly_coeffs(self, g: int, n: int, trunc: int | None = None) -> list[int]:
        """Coefficients of ``Q_g^n(x)``, optionally only up to ``x**trunc``."""
        if g < 0 or n < 0:
            return []
        with self._lock:
            table = self._qpoly.get(trunc)
            if table is None or len(table) <= g or len(table[g]) <= n:
                self._extend_qpoly(g, n, trunc)
                table = self._qpoly[trunc]
            return list(table[g][n])

    def q_poly(self, g: int, n: int) -> UniPoly:
        return UniPoly(self.q_poly_coeffs(g, n), var="x")

    def q_count_faces(self, g: int, n: int, f: int) -> int:
        if f < 0:
            return 0
        c = self.q_poly_coeffs(g, n, trunc=f)
        return c[f] if f < len(c) else 0

    # -- Harer-Zagier --------------------------------------------------

    def _extend_eps(self, g_max: int, n_max: int) -> None:
        eps = self._eps
        while len(eps) <= g_max:
            eps.append([])
        for g in range(g_max + 1):
            row = eps[g]
            for n in range(len(row), n_max + 1):
                if n == 0:
                    row.append(1 if g == 0 else 0)
                    continue
                if 2 * g > n:
                    row.append(0)
                    continue
                num = 4 * (2 * n - 1) * row[n - 1]
                if g >= 1 and n >= 2:
                    num += (2 * n - 3) * (2 * n - 2) * (2 * n - 1) * eps[g - 1][n - 2]
                row.append(_exact_div(num, 2 * (n + 1), f"eps_{g}({n})"))

    def hz(self, g: int, n: int) -> int:
        if g < 0 or n < 0:
            return 0
        with self._lock:
            if len(self._eps) <= g or len(self._eps[g]) <= n:
                self._extend_eps(g, n)
            return self._eps[g][n]

    def hz_row(self, g: int, n_max: int) -> list[int]:
        if g < 0:
            return [0] * (n_max + 1)
        self.hz(g, n_max)
        return list(self._eps[g][: n_max + 1])

    # -- M_g^{i,j} -----------------------------------------------------

    def m_count(self, g: int, i: int, j: int) -> int:
        if g < 0 or i < 1 or j < 1:
            return 0
        n = i + j + 2 * g - 2
        if n < 0:
            return 0
        if n == 0:
            return 1 if (i, j) == (1, 1) else 0
        with self._lock:
            key = (g, i, j)
            v = self._m.get(key)
            if v is None:
                self._fill_m(n)
                v = self._m.get(key, 0)
            return v

    def _fill_m(self, n_max: int) -> None:
        """Fill every M_g^{i,j} with i + j + 2g - 2 <= n_max, in increasing n."""
        m = self._m
        done = self._m_frontier
        for n in range(max(done, 1), n_max + 1):
            for g in range(n // 2 + 1):
                for i in range(1, n + 2 - 2 * g):
                    j = n + 2 - 2 * g - i
                    if j < 1:
                        continue
                    m[(g, i, j)] = self._m_entry(g, i, j, n)
        self._m_frontier = max(done, n_max + 1)

    def _m_get(self, g: int, i: int, j: int) -> int:
        if g < 0 or i < 1 or j < 1:
            return 0
        n = i + j + 2 * g - 2
        if n == 0:
            return 1 if (i, j) == (1, 1) else 0
        return self._m.get((g, i, j), 0)

    def _m_entry(self, g: int, i: int, j: int, n: int) -> int:
        # 12 * RHS; the factor (2n-1)/3 becomes 4(2n-1).
        inner = 4 * (self._m_get(g, i - 1, j) + self._m_get(g, i, j - 1))
        if g >= 1:
            inner += (2 * n - 3) * (2 * n - 2) * self._m_get(g - 1, i, j)
        num = (2 * n - 1) * inner
        s = 0
        for g1 in range(g + 1):
            g2 = g - g1
            for i1 in range(1, i):
                i2 = i - i1
                for j1 in range(1, j):
                    j2 = j - j1
                    a = self._m_get(g1, i1, j1)
                    if not a:
                        continue
                    b = self._m_get(g2, i2, j2)
                    if b:
                        n1 = i1 + j1 + 2 * g1 - 1
                        n2 = i2 + j2 + 2 * g2 - 1
                        s += (2 * n1 - 1) * (2 * n2 - 1) * a * b
        num += 6 * s
        return _exact_div(num, 2 * (n + 1), f"M_{g}^({i},{j})")

    # -- H_n(x, s) -----------------------------------------------------

    def genus_poly_coeffs(self, n: int) -> list[list[int]]:
        """``H_n`` as ``rows[g][f]`` = coefficient of ``s**g x**f``."""
        if n < 0:
            return []
        with self._lock:
            h = self._h
            for m in range(len(h), n + 1):
                h.append(self._h_entry(m))
            return [list(r) for r in h[n]]

    def _h_entry(self, n: int) -> list[list[int]]:
        h = self._h
        if n == 0:
            return [[0, 1]]
        width = n + 3
        acc: dict[tuple[int, int], int] = {}

        def add(rows, scale, ds, dx):
            for g, r in enumerate(rows):
                for f, c in enumerate(r):
                    if c:
                        key = (g + ds, f + dx)
                        acc[key] = acc.get(key, 0) + scale * c

        prev = h[n - 1]
        add(prev, 4 * (2 * n - 1), 0, 0)
        add(prev, 4 * (2 * n - 1), 0, 1)
        if n >= 2:
            add(h[n - 2], (2 * n - 3) * (2 * n - 2) * (2 * n - 1), 1, 0)
        # sum_{k + l = n} (2k - 1)(2l - 1) H_{k-1} H_{l-1}, packed with
        # flat index g * width + f.
        flats = []
        for m in range(n - 1):
            flat = []
            for g, r in enumerate(h[m]):
                flat.extend([0] * (g * width - len(flat)))
                flat.extend(r)
            flats.append(flat)
        if n >= 2:
            length = max(len(flats[k - 1]) + len(flats[n - k - 1]) - 1 for k in range(1, n))
            bits = _packed_convolution_bits(flats, n * length) + 2 * (2 * n).bit_length()
            packed = [pack(fl, bits) for fl in flats]
            total = 0
            for k in range(1, n):
                l = n - k
                total += (2 * k - 1) * (2 * l - 1) * packed[k - 1] * packed[l - 1]
            conv = unpack(total, bits, length)
            for idx, c in enumerate(conv):
                if c:
                    key = divmod(idx, width)
                    acc[key] = acc.get(key, 0) + 6 * c
        den = 2 * (n + 1)
        g_top = max((g for g, _ in acc), default=-1)
        rows = []
        for g in range(g_top + 1):
            f_top = max((f for gg, f in acc if gg == g), default=-1)
            row = [_exact_div(acc.get((g, f), 0), den, f"[s^{g} x^{f}] H_{n}") for f in range(f_top + 1)]
            while row and row[-1] == 0:
                row.pop()
            rows.append(row)
        while rows and not rows[-1]:
            rows.pop()
        return rows

    # -- bulk export ---------------------------------------------------

    def table_range(self, g_max: int, n_max: int, with_faces: bool = False) -> dict:
        """All nonzero ``Q_g^n`` (and optionally ``Q_g^n(x)``) with ``n <= n_max``.

        Keys are ``(g, n)``; values are ints, or coefficient lists when
        ``with_faces`` is set.
        """
        out = {}
        for n in range(n_max + 1):
            for g in range(min(g_max, n // 2) + 1):
                if with_faces:
                    out[(g, n)] = self.q_poly_coeffs(g, n)
                else:
                    out[(g, n)] = self.q_count(g, n)
        return out

    # -- cache support -------------------------------------------------

    def export_state(self) -> dict:
        with self._lock:
            return {
                "Q": [list(r) for r in self._q],
                "Qpoly": [[list(c) for c in r] for r in self._qpoly.get(None, [])],
                "M": dict(self._m),
                "m_frontier": self._m_frontier,
            }

    def import_state(self, state: dict) -> None:
        with self._lock:
            self._q = [list(r) for r in state.get("Q", [])]
            self._qw = [[(2 * m + 1) * v for m, v in enumerate(r)] for r in self._q]
            if state.get("Qpoly"):
                self._qpoly[None] = [[list(c) for c in r] for r in state["Qpoly"]]
            self._m = dict(state.get("M", {}))
            self._m_frontier = state.get("m_frontier", 0)


def _add_shifted(acc: list, b, scale: int, shift: int) -> None:
    need = len(b) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(b):
        if c:
            acc[k + shift] += scale * c


_default = RecurrenceEngine()


def default_engine() -> RecurrenceEngine:
    return _default


def q_count(g: int, n: int) -> int:
    """Number of rooted maps of genus ``g`` with ``n`` edges."""
    return _default.q_count(g, n)


def q_poly(g: int, n: int) -> UniPoly:
    """Face polynomial ``Q_g^n(x)``."""
    return _default.q_poly(g, n)


def q_count_faces(g: int, n: int, f: int) -> int:
    return _default.q_count_faces(g, n, f)


def hz(g: int, n: int) -> int:
    """Harer-Zagier number: one-face rooted maps of genus ``g`` with ``n`` edges."""
    return _default.hz(g, n)


def m_count(g: int, i: int, j: int) -> int:
    """Rooted maps of genus ``g`` with ``i`` vertices and ``j`` faces."""
    return _default.m_count(g, i, j)


def genus_poly(n: int) -> list[UniPoly]:
    """``H_n(x, s)`` as a list indexed by genus of face polynomials."""
    return [UniPoly(r, var="x") for r in _default.genus_poly_coeffs(n)]


def table_range(g_max: int, n_max: int, with_faces: bool = False) -> dict:
    return _default.table_range(g_max, n_max, with_faces)
