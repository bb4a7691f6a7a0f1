from fractions import Fraction
from math import comb, factorial

from hypothesis import given, settings
from hypothesis import strategies as st

from rootedmaps.arith import UniPoly
from rootedmaps.recurrences import (
    RecurrenceEngine,
    genus_poly,
    hz,
    m_count,
    q_count,
    q_count_faces,
    q_poly,
    table_range,
)

x = UniPoly.monomial(1, var="x")
gn = st.integers(0, 14).flatmap(lambda n: st.tuples(st.integers(0, n // 2 + 1), st.just(n)))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_q_count_examples():
    assert q_count(0, 0) == 1
    assert q_count(0, 2) == 9
    assert q_count(1, 3) == 20
    assert [q_count(0, n) for n in range(6)] == [1, 2, 9, 54, 378, 2916]
    assert [q_count(1, n) for n in range(7)] == [0, 0, 1, 20, 307, 4280, 56914]
    assert q_count(2, 3) == 0


def test_out_of_range_indices_are_zero():
    assert q_count(5, 4) == 0
    assert q_count(-1, 3) == 0
    assert q_count(0, -1) == 0
    assert hz(-1, 4) == 0
    assert m_count(0, 0, 2) == 0
    assert q_count_faces(0, 3, -1) == 0


def test_q_poly_examples():
    assert q_poly(0, 0) == x
    assert q_poly(0, 1) == x + x ** 2
    assert q_poly(0, 2) == x * 2 + x ** 2 * 5 + x ** 3 * 2
    assert q_poly(1, 2) == x


def test_q_count_faces_examples():
    assert q_count_faces(0, 0, 1) == 1
    assert q_count_faces(0, 2, 2) == 5
    assert q_count_faces(1, 2, 1) == 1


def test_hz_examples():
    assert hz(0, 4) == 14
    assert hz(1, 3) == 10
    assert hz(2, 4) == 21


def test_m_count_examples():
    assert m_count(0, 1, 1) == 1
    assert m_count(0, 2, 1) == 1
    assert m_count(1, 1, 1) == 1
    assert m_count(1, 2, 2) == 167


def test_genus_poly_examples():
    assert genus_poly(0) == [x]
    assert genus_poly(1) == [x + x ** 2]
    assert genus_poly(2) == [x * 2 + x ** 2 * 5 + x ** 3 * 2, x]


def test_table_range_examples():
    t = table_range(1, 3)
    nonzero = {k: v for k, v in t.items() if v}
    assert nonzero == {(0, 0): 1, (0, 1): 2, (0, 2): 9, (0, 3): 54, (1, 2): 1, (1, 3): 20}
    assert {k: v for k, v in table_range(0, 0).items() if v} == {(0, 0): 1}
    assert table_range(5, 4)[(2, 4)] == 21 == hz(2, 4)


@settings(max_examples=40, deadline=None)
@given(gn)
def test_q_poly_specializes_to_q_count(pair):
    g, n = pair
    assert q_poly(g, n)(1) == q_count(g, n)


@settings(max_examples=40, deadline=None)
@given(gn)
def test_q_poly_palindromic(pair):
    # duality swaps vertices and faces: f <-> n + 2 - 2g - f
    g, n = pair
    c = list(q_poly(g, n).coeffs)
    top = n + 2 - 2 * g
    if not c:
        return
    c += [0] * (top + 1 - len(c))
    assert c[1:top] == c[1:top][::-1]
    assert c[0] == 0
    assert len(q_poly(g, n).coeffs) <= top


@settings(max_examples=40, deadline=None)
@given(gn)
def test_face_counts_match_polynomial(pair):
    g, n = pair
    p = q_poly(g, n)
    for f in range(n + 3):
        assert q_count_faces(g, n, f) == p[f]


@settings(max_examples=30, deadline=None)
@given(gn)
def test_m_count_matches_faces(pair):
    g, n = pair
    for f in range(1, n + 2):
        v = n + 2 - 2 * g - f
        if v < 1:
            continue
        assert m_count(g, v, f) == q_count_faces(g, n, f)
        assert m_count(g, v, f) == m_count(g, f, v)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 12), st.integers(1, 20))
def test_m_count_euler_support(g, s):
    for i in range(1, s):
        j = s - i
        n = i + j + 2 * g - 2
        if n < 0:
            assert m_count(g, i, j) == 0


def test_hz_is_one_face_slice():
    for n in range(30):
        for g in range(n // 2 + 2):
            assert hz(g, n) == q_count_faces(g, n, 1)


def test_hz_catalan():
    assert [hz(0, n) for n in range(60)] == [catalan(n) for n in range(60)]


def test_genus_poly_matches_q_poly():
    for n in range(10):
        rows = genus_poly(n)
        assert len(rows) == n // 2 + 1
        for g, p in enumerate(rows):
            assert p == q_poly(g, n)


def test_planar_closed_form():
    # Q_0^n = 2 * 3^n (2n)! / (n! (n + 2)!)
    for n in range(40):
        assert q_count(0, n) == 2 * 3 ** n * factorial(2 * n) // (factorial(n) * factorial(n + 2))


def test_fresh_engine_agrees_with_default():
    e = RecurrenceEngine()
    assert e.q_count(2, 12) == q_count(2, 12)
    assert e.q_poly_coeffs(1, 7) == list(q_poly(1, 7).coeffs)
    assert e.m_count(2, 3, 4) == m_count(2, 3, 4)


def test_truncated_face_counts_agree():
    e = RecurrenceEngine()
    first = e.q_count_faces(2, 15, 3)
    full = RecurrenceEngine().q_poly_coeffs(2, 15)
    assert first == full[3]


def test_state_round_trip():
    e = RecurrenceEngine()
    e.q_count(2, 9)
    e.q_poly_coeffs(1, 6)
    e.m_count(1, 3, 3)
    f = RecurrenceEngine()
    f.import_state(e.export_state())
    assert f.export_state() == e.export_state()
    assert f.q_count(3, 11) == q_count(3, 11)


def test_face_recurrence_in_rationals():
    # the (n, f) recurrence evaluated with Fractions on the engine's own values
    Qf = q_count_faces
    for g in range(4):
        for n in range(1, 11):
            for f in range(1, n + 2):
                rhs = Fraction(2 * n - 1, 3) * (Qf(g, n - 1, f) + Qf(g, n - 1, f - 1))
                if g >= 1 and n >= 2:
                    rhs += Fraction((2 * n - 3) * (2 * n - 2) * (2 * n - 1), 12) * Qf(g - 1, n - 2, f)
                conv = 0
                for k in range(1, n):
                    l = n - k
                    for u in range(1, f):
                        for i in range(g + 1):
                            conv += (2 * k - 1) * (2 * l - 1) * Qf(i, k - 1, u) * Qf(g - i, l - 1, f - u)
                rhs += Fraction(conv, 2)
                assert Fraction(n + 1, 6) * Qf(g, n, f) == rhs


def test_edge_recurrence_in_rationals():
    for g in range(5):
        for n in range(1, 25):
            rhs = Fraction(4 * n - 2, 3) * q_count(g, n - 1)
            if g >= 1 and n >= 2:
                rhs += Fraction((2 * n - 3) * (2 * n - 2) * (2 * n - 1), 12) * q_count(g - 1, n - 2)
            conv = sum((2 * k - 1) * (2 * (n - k) - 1) * q_count(i, k - 1) * q_count(g - i, n - k - 1)
                       for k in range(1, n) for i in range(g + 1))
            rhs += Fraction(conv, 2)
            assert Fraction(n + 1, 6) * q_count(g, n) == rhs


def test_support():
    for n in range(12):
        for g in range(8):
            assert (q_count(g, n) > 0) == (2 * g <= n)
