"""Closed form of ``M_g(x, y)`` by undetermined coefficients.

With ``x = p(1 - p - 2q)``, ``y = q(1 - 2p - q)`` and
``Delta = (1 - 2p - 2q)^2 - 4pq``,

    M_g(x, y) = p q (1 - p - q) P_g(p, q) / Delta^(5g - 3)

for a polynomial ``P_g`` of total degree at most ``6g - 6``. The unknown
coefficients of ``P_g`` are found by matching both sides in the ``(p, q)``
chart on all monomials of total degree ``2 .. 6g - 4`` and solving the
resulting exact linear system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .arith import BiSeries
from .errors import InconsistentSystem, UnderdeterminedSystem, ValidationMismatch
from .recurrences import RecurrenceEngine, default_engine

PQ = ("p", "q")
XY = ("x", "y")


def x_of_pq(degree: int) -> BiSeries:
    return BiSeries({(1, 0): 1, (2, 0): -1, (1, 1): -2}, degree, PQ)


def y_of_pq(degree: int) -> BiSeries:
    return BiSeries({(0, 1): 1, (0, 2): -1, (1, 1): -2}, degree, PQ)


def delta(degree: int, vars=PQ) -> BiSeries:
    # (1 - 2p - 2q)^2 - 4pq = 1 - 4p - 4q + 4p^2 + 4pq + 4q^2
    return BiSeries({(0, 0): 1, (1, 0): -4, (0, 1): -4, (2, 0): 4, (1, 1): 4, (0, 2): 4},
                    degree, vars)


def m_generating_series(g: int, order: int, engine: RecurrenceEngine | None = None) -> BiSeries:
    """``sum M_g^{i,j} x^i y^j`` over ``i + j <= order``."""
    engine = engine or default_engine()
    terms = {}
    for s in range(2, order + 1):
        for i in range(1, s):
            v = engine.m_count(g, i, s - i)
            if v:
                terms[(i, s - i)] = v
    return BiSeries(terms, order, XY)


def m_series_pq(g: int, order: int, engine: RecurrenceEngine | None = None) -> BiSeries:
    """``M_g(x(p, q), y(p, q))`` truncated at total degree ``order``."""
    m = m_generating_series(g, order, engine)
    return m.substitute(x_of_pq(order), y_of_pq(order))


def pq_of_xy(degree: int) -> tuple[BiSeries, BiSeries]:
    """Compositional inverse of the ``(p, q) -> (x, y)`` substitution."""
    x = BiSeries.first(degree, XY)
    y = BiSeries.second(degree, XY)
    p, q = x, y
    # p = x + p(p + 2q), q = y + q(2p + q); each pass fixes one more degree.
    for _ in range(degree):
        p, q = x + p * (p + q * 2), y + q * (p * 2 + q)
    return p, q


@dataclass
class LinearSolveReport:
    equations: int
    unknowns: int
    rank: int


@dataclass(frozen=True)
class BivariateRationalRecord:
    g: int
    pg: dict  # {(a, b): Fraction}
    total_degree: int
    fit_range: tuple[int, int]  # inclusive total-degree range of matched monomials
    diagnostics: LinearSolveReport = field(compare=False)

    def is_symmetric(self) -> bool:
        return all(self.pg.get((b, a), 0) == c for (a, b), c in self.pg.items())

    def monomials(self) -> list[tuple[int, int, Fraction]]:
        return [(a, b, c) for (a, b), c in sorted(self.pg.items(), key=lambda kv: (sum(kv[0]), kv[0]))]


def solve_exact(rows: Sequence[dict], rhs: Sequence[int], columns: Sequence) -> tuple[dict, LinearSolveReport]:
    """Solve a sparse integer system exactly by fraction-free elimination.

    ``rows[r]`` maps column keys to integer coefficients. Columns are
    eliminated in the order given; each pivot is the remaining row with
    the fewest nonzeros (ties broken by row index). Rows are kept
    primitive by dividing out the content after every update.
    """
    work = [(dict(r), b, idx) for idx, (r, b) in enumerate(zip(rows, rhs))]
    live = set(range(len(work)))
    by_col: dict = {}
    for k, (r, _, _) in enumerate(work):
        for c in r:
            by_col.setdefault(c, set()).add(k)
    pivots = []
    for col in columns:
        cand = sorted(k for k in by_col.get(col, ()) if k in live)
        if not cand:
            continue
        p = min(cand, key=lambda k: (len(work[k][0]), work[k][2]))
        live.remove(p)
        prow, pb, _ = work[p]
        pv = prow[col]
        for k in cand:
            if k == p:
                continue
            row, b, idx = work[k]
            f = row[col]
            # row <- pv * row - f * prow
            new = {c: pv * v for c, v in row.items()}
            for c, v in prow.items():
                new[c] = new.get(c, 0) - f * v
            nb = pv * b - f * pb
            new = {c: v for c, v in new.items() if v}
            g = abs(nb)
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {c: v // g for c, v in new.items()}
                nb //= g
            for c in row:
                if c not in new:
                    by_col[c].discard(k)
            for c in new:
                by_col.setdefault(c, set()).add(k)
            work[k] = (new, nb, idx)
        pivots.append((col, p))
    for k in sorted(live):
        row, b, idx = work[k]
        if not row and b:
            raise InconsistentSystem(idx)
    report = LinearSolveReport(len(rows), len(columns), len(pivots))
    if len(pivots) < len(columns):
        raise UnderdeterminedSystem(len(pivots), len(columns))
    solution: dict = {}
    for col, p in reversed(pivots):
        row, b, _ = work[p]
        acc = Fraction(b)
        for c, v in row.items():
            if c != col:
                acc -= v * solution[c]
        solution[col] = acc / row[col]
    return solution, report


def fit_pg(g: int, engine: RecurrenceEngine | None = None, equation_order: Sequence | None = None) -> BivariateRationalRecord:
    """Determine ``P_g`` from the counts ``M_g^{i,j}``, ``2 <= i + j <= 6g - 4``."""
    if g < 1:
        raise ValueError("fit_pg needs g >= 1")
    top = 6 * g - 6
    data_deg = 6 * g - 4
    unknowns = [(a, s - a) for s in range(top + 1) for a in range(s + 1)]
    data = m_series_pq(g, data_deg, engine)
    # kernel = (1 - p - q) / Delta^(5g-3); column (a, b) is p^(a+1) q^(b+1) * kernel.
    kernel = BiSeries({(0, 0): 1, (1, 0): -1, (0, 1): -1}, data_deg, PQ) * delta(data_deg) ** (-(5 * g - 3))
    kterms = sorted(kernel.terms.items())
    targets = [(A, s - A) for s in range(2, data_deg + 1) for A in range(s + 1)]
    rows_by_target = {t: {} for t in targets}
    for a, b in unknowns:
        for (c, d), v in kterms:
            key = (a + 1 + c, b + 1 + d)
            if key[0] + key[1] <= data_deg:
                rows_by_target[key][(a, b)] = _as_int(v)
    order = list(equation_order) if equation_order is not None else targets
    rows = [rows_by_target[t] for t in order]
    rhs = [_as_int(data[t]) for t in order]
    solution, report = solve_exact(rows, rhs, unknowns)
    pg = {k: v for k, v in solution.items() if v}
    degree = max((a + b for a, b in pg), default=0)
    return BivariateRationalRecord(g, pg, degree, (2, data_deg), report)


def _as_int(v) -> int:
    f = Fraction(v)
    if f.denominator != 1:
        raise ValueError(f"expected an integral coefficient, got {f}")
    return f.numerator


def closed_form_series(g: int, pg: dict, degree: int) -> BiSeries:
    """Expand ``pq(1-p-q) P_g / Delta^(5g-3)`` in ``(x, y)`` to total degree ``degree``."""
    p, q = pq_of_xy(degree)
    top = max((max(a, b) for a, b in pg), default=0)
    p_pows, q_pows = [BiSeries.constant(1, degree, XY)], [BiSeries.constant(1, degree, XY)]
    for _ in range(top):
        p_pows.append(p_pows[-1] * p)
        q_pows.append(q_pows[-1] * q)
    # Horner over powers of q: sum_b q^b * (sum_a c_ab p^a)
    by_b: dict = {}
    for (a, b), c in pg.items():
        by_b.setdefault(b, []).append((a, c))
    poly = BiSeries({}, degree, XY)
    for b, items in by_b.items():
        col = BiSeries({}, degree, XY)
        for a, c in items:
            col = col + p_pows[a] * c
        poly = poly + col * q_pows[b]
    d = delta(degree, PQ).substitute(p, q)
    return p * q * (1 - p - q) * poly * d ** (-(5 * g - 3))


@dataclass
class ValidationReport:
    g: int
    degree: int
    checked: int


def validate_pg(record: BivariateRationalRecord, extra_order: int,
                engine: RecurrenceEngine | None = None) -> ValidationReport:
    """Compare the closed form against freshly computed ``M_g^{i,j}`` beyond the fit range."""
    engine = engine or default_engine()
    g = record.g
    degree = record.fit_range[1] + extra_order
    series = closed_form_series(g, record.pg, degree)
    checked = 0
    for s in range(0, degree + 1):
        for i in range(s + 1):
            j = s - i
            expected = engine.m_count(g, i, j)
            got = series[(i, j)]
            if got != expected:
                raise ValidationMismatch(g, i, j, expected, got)
            checked += 1
    return ValidationReport(g, degree, checked)
