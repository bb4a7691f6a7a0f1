"""Brute-force censuses of small maps, used as ground truth.

Rotation systems: darts ``0 .. 2n-1`` with the fixed edge involution
``alpha0 = (0 1)(2 3)...``. Every ``sigma`` in the symmetric group is
scanned; transitive pairs ``<sigma, alpha0>`` are maps with vertices the
cycles of ``sigma`` and faces the cycles of ``sigma alpha0``. Each rooted
map arises from exactly ``2^(n-1) (n-1)!`` such ``sigma``.

Bipartite maps: transitive triples ``sigma_white sigma_black = phi`` in
``S_m``; each rooted bipartite map arises ``(m-1)!`` times.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Iterable, Sequence

from .errors import IdentityViolation, NonIntegerClassCount, VerificationFailure
from .recurrences import RecurrenceEngine, default_engine

MAX_ROTATION_EDGES = 6
MAX_BIPARTITE_EDGES = 7


@dataclass(frozen=True)
class DartPermutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a permutation")

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: DartPermutation) -> DartPermutation:
        """``self o other``: apply ``other`` first."""
        return DartPermutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> DartPermutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return DartPermutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles, each started at its smallest element, in order of that element."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def num_cycles(self) -> int:
        return _count_cycles(self.images)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


def _count_cycles(p: Sequence[int]) -> int:
    n = len(p)
    seen = [False] * n
    count = 0
    for s in range(n):
        if not seen[s]:
            count += 1
            i = s
            while not seen[i]:
                seen[i] = True
                i = p[i]
    return count


def _cycle_labels(p: Sequence[int]) -> tuple[list[int], int]:
    n = len(p)
    label = [-1] * n
    count = 0
    for s in range(n):
        if label[s] < 0:
            i = s
            while label[i] < 0:
                label[i] = count
                i = p[i]
            count += 1
    return label, count


def _connected(labels: Sequence[int], count: int, links: Iterable[tuple[int, int]]) -> bool:
    """Whether the graph on cycle labels with the given dart links is connected."""
    parent = list(range(count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = count
    for a, b in links:
        ra, rb = find(labels[a]), find(labels[b])
        if ra != rb:
            parent[ra] = rb
            comps -= 1
            if comps == 1:
                return True
    return comps == 1


@dataclass
class OracleCensus:
    """Counts of rooted maps with ``n`` edges by ``(genus, vertices, faces)``."""

    n: int
    counts: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def genus_totals(self) -> dict[int, int]:
        out: Counter = Counter()
        for (g, _, _), c in self.counts.items():
            out[g] += c
        return dict(out)

    def face_distribution(self, g: int) -> dict[int, int]:
        out: Counter = Counter()
        for (gg, _, f), c in self.counts.items():
            if gg == g:
                out[f] += c
        return dict(out)

    def vertex_face_counts(self, g: int) -> dict[tuple[int, int], int]:
        return {(v, f): c for (gg, v, f), c in self.counts.items() if gg == g}


def _rotation_chunk(args) -> Counter:
    n, first = args
    darts = 2 * n
    rest = [d for d in range(darts) if d != first]
    raw: Counter = Counter()
    edge_links = [(2 * k, 2 * k + 1) for k in range(n)]
    for tail in permutations(rest):
        sigma = (first,) + tail
        labels, v = _cycle_labels(sigma)
        if v > 1 and not _connected(labels, v, edge_links):
            continue
        # faces: cycles of sigma o alpha0, i -> sigma[i ^ 1]
        phi = [sigma[i ^ 1] for i in range(darts)]
        f = _count_cycles(phi)
        raw[(v, f)] += 1
    return raw


def census_rooted_maps(n: int, workers: int = 1) -> OracleCensus:
    """Exhaustive census of rooted maps with ``n`` edges (``1 <= n <= 6``)."""
    if not 1 <= n <= MAX_ROTATION_EDGES:
        raise ValueError(f"rotation-system census supports 1 <= n <= {MAX_ROTATION_EDGES}")
    chunks = [(n, first) for first in range(2 * n)]
    raw: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_rotation_chunk, chunks):
                raw.update(part)
    else:
        for c in chunks:
            raw.update(_rotation_chunk(c))
    norm = 2 ** (n - 1) * factorial(n - 1)
    counts = {}
    for (v, f), c in sorted(raw.items()):
        q, r = divmod(c, norm)
        if r:
            raise NonIntegerClassCount((v, f), c, norm)
        two_g = n + 2 - v - f
        counts[(two_g // 2, v, f)] = q
    return OracleCensus(n, counts)


def _perms_of_type(m: int, profile: tuple[int, ...]) -> list[tuple[int, ...]]:
    target = tuple(sorted(profile, reverse=True))
    out = []
    for p in permutations(range(m)):
        if DartPermutation(p).cycle_type() == target:
            out.append(p)
    return out


def census_bipartite(m: int, profile: Sequence[int]) -> dict[tuple[int, int], int]:
    """Rooted bipartite maps with ``m`` edges and half face degrees ``profile``.

    Returns counts keyed by ``(white vertices, total vertices)``.
    """
    if not 1 <= m <= MAX_BIPARTITE_EDGES:
        raise ValueError(f"bipartite census supports 1 <= m <= {MAX_BIPARTITE_EDGES}")
    profile = tuple(profile)
    if sum(profile) != m or any(k < 1 for k in profile):
        raise ValueError(f"{profile} is not a partition of {m}")
    # The pair (sigma_white, sigma_black) is determined by (sigma_white, phi)
    # via sigma_black = sigma_white^-1 phi, so scanning phi over its class
    # covers exactly the pairs whose product has the requested cycle type.
    phis = _perms_of_type(m, profile)
    raw: Counter = Counter()
    for white in permutations(range(m)):
        inv = [0] * m
        for i, j in enumerate(white):
            inv[j] = i
        wl, wc = _cycle_labels(white)
        for phi in phis:
            black = [inv[phi[i]] for i in range(m)]
            # <white, black> transitive iff white-cycles linked by black are connected
            if wc > 1 and not _connected(wl, wc, ((i, black[i]) for i in range(m))):
                continue
            bc = _count_cycles(black)
            raw[(wc, wc + bc)] += 1
    norm = factorial(m - 1)
    out = {}
    for key, c in sorted(raw.items()):
        q, r = divmod(c, norm)
        if r:
            raise NonIntegerClassCount(key, c, norm)
        out[key] = q
    return out


def bipartite_genus(m: int, faces: int, vertices: int) -> int:
    two_g = 2 - vertices + m - faces
    return two_g // 2


def quadrangulation_census(n: int) -> dict[int, dict[int, int]]:
    """Rooted bipartite quadrangulations with ``n`` faces: ``{genus: {white: count}}``."""
    raw = census_bipartite(2 * n, (2,) * n)
    out: dict[int, dict[int, int]] = {}
    for (white, total), c in raw.items():
        g = bipartite_genus(2 * n, n, total)
        out.setdefault(g, {})
        out[g][white] = out[g].get(white, 0) + c
    return out


def hexagon_polynomials(n: int) -> dict[int, list[int]]:
    """``X_g^n(x)``: one face of degree 6, the rest degree 4, ``2n - 1`` edges."""
    m = 2 * n - 1
    profile = (3,) + (2,) * (n - 2)
    raw = census_bipartite(m, profile)
    out: dict[int, list[int]] = {}
    for (white, total), c in raw.items():
        g = bipartite_genus(m, n - 1, total)
        coeffs = out.setdefault(g, [])
        coeffs.extend([0] * (white + 1 - len(coeffs)))
        coeffs[white] += c
    return out


@dataclass
class HexaReport:
    n: int
    genera: list[int]


def verify_tutte_hexa(n: int, engine: RecurrenceEngine | None = None,
                      perturb: Callable[[dict], dict] | None = None) -> HexaReport:
    """Check ``Q_g^n(x) = 3/(2n-1) X_g^n(x) + (1+x) Q_g^(n-1)(x)`` for every genus."""
    if not 2 <= n <= 4:
        raise ValueError("hexagon identity check supports 2 <= n <= 4")
    engine = engine or default_engine()
    X = hexagon_polynomials(n)
    if perturb is not None:
        X = perturb(X)
    genera = sorted(set(X) | set(range(n // 2 + 1)))
    for g in genera:
        x = X.get(g, [])
        prev = engine.q_poly_coeffs(g, n - 1)
        rhs: list = [Fraction(0)] * (max(len(x), len(prev) + 1) + 1)
        for f, c in enumerate(x):
            rhs[f] += Fraction(3 * c, 2 * n - 1)
        for f, c in enumerate(prev):
            rhs[f] += c
            rhs[f + 1] += c
        lhs = engine.q_poly_coeffs(g, n)
        size = max(len(lhs), len(rhs))
        diff = [(lhs[f] if f < len(lhs) else 0) - (rhs[f] if f < len(rhs) else 0) for f in range(size)]
        if any(diff):
            raise IdentityViolation(g, n, diff)
    return HexaReport(n, genera)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))


def verify_all(n_max: int, engine: RecurrenceEngine | None = None, workers: int = 1,
               bipartite_max_edges: int = 6) -> VerificationReport:
    """Compare oracle censuses against every recurrence for ``1 <= n <= n_max``."""
    engine = engine or default_engine()
    report = VerificationReport()
    for n in range(1, n_max + 1):
        census = census_rooted_maps(n, workers=workers)
        totals = census.genus_totals()
        genera = range(n // 2 + 1)
        for g in genera:
            want = totals.get(g, 0)
            got = engine.q_count(g, n)
            report.add(f"q_count(g={g}, n={n})", got == want, f"recurrence {got}, oracle {want}")
        for g in genera:
            dist = census.face_distribution(g)
            coeffs = engine.q_poly_coeffs(g, n)
            want = [dist.get(f, 0) for f in range(max(len(coeffs), max(dist, default=0) + 1))]
            got = coeffs + [0] * (len(want) - len(coeffs))
            report.add(f"q_poly(g={g}, n={n})", got == want, f"recurrence {got}, oracle {want}")
        bad = []
        for g in genera:
            for v in range(1, n + 2):
                for f in range(1, n + 2):
                    if v + f + 2 * g != n + 2:
                        continue
                    want = census.counts.get((g, v, f), 0)
                    got = engine.m_count(g, v, f)
                    if got != want:
                        bad.append(f"M_{g}^({v},{f}) recurrence {got} oracle {want}")
        report.add(f"m_count(n={n})", not bad, "; ".join(bad))
        for g in genera:
            want = census.counts.get((g, n + 1 - 2 * g, 1), 0)
            got = engine.hz(g, n)
            report.add(f"hz(g={g}, n={n})", got == want, f"recurrence {got}, oracle {want}")
        if 2 * n <= bipartite_max_edges:
            quad = quadrangulation_census(n)
            for g in genera:
                want = census.face_distribution(g)
                got = quad.get(g, {})
                report.add(f"tutte_bijection(g={g}, n={n})", got == want,
                           f"quadrangulation white vertices {got}, map faces {want}")
    for n in range(2, min(n_max, 3) + 1):
        if 2 * n - 1 > bipartite_max_edges:
            continue
        try:
            verify_tutte_hexa(n, engine)
            report.add(f"tutte_hexa(n={n})", True)
        except VerificationFailure as exc:
            report.add(f"tutte_hexa(n={n})", False, str(exc))
    return report
