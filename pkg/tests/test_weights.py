from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from e6mult.notation import expand
from e6mult.parabolic import e6_14_split
from e6mult.rootsys import e6_roots, form
from e6mult.weights import (
    ShiftedWeight,
    bgg_reducibilities,
    hc_param,
    is_m_dominant,
    shifted_reflect,
    to_signature,
)

E6 = e6_roots()
SPLIT = e6_14_split()
TOP = E6.highest_root
ONES = ShiftedWeight.rho(6)
CHI_A_MINUS = ShiftedWeight((1, -1, 1, 2, 1, 1))


def _inverse(rows):
    """Exact Gauss-Jordan inverse over the rationals."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c])
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [r[n:] for r in m]


A_INV = _inverse(E6.cartan.entries)


def param_by_form(labels, beta):
    """(Lambda+rho, beta) via simple-root coordinates and the bilinear form."""
    coords = [sum(A_INV[i][j] * labels[j] for j in range(6)) for i in range(6)]
    return form(E6.cartan, coords, beta)


def test_hc_param_examples():
    assert hc_param(ONES, TOP) == 11
    assert hc_param(ONES, expand("2")) == 1
    assert hc_param(ShiftedWeight((1, 2, 3, 4, 5, 6)), expand("2,4")) == 6


def test_bgg_reducibilities_examples():
    red = bgg_reducibilities(ONES, SPLIT)
    assert [b for b, _ in red] == list(SPLIT.noncompact_roots)
    assert dict(red)[TOP] == 11
    red_a = dict(bgg_reducibilities(CHI_A_MINUS, SPLIT))
    assert expand("2") not in red_a
    assert red_a[expand("2,4")] == 1
    assert bgg_reducibilities(ShiftedWeight((-1,) * 6), SPLIT) == []


def test_shifted_reflect_examples():
    assert shifted_reflect(ONES, expand("2"), E6) == CHI_A_MINUS
    w = ShiftedWeight((1, 2, 3, 4, 5, 6))
    r = shifted_reflect(w, TOP, E6)
    m_top = hc_param(w, TOP)
    assert r.labels == (1, 2 - m_top, 3, 4, 5, 6)
    wall = ShiftedWeight((1, 0, 1, 1, 1, 1))
    assert shifted_reflect(wall, expand("2"), E6) == wall


def test_signature_examples():
    s = to_signature(ONES, SPLIT)
    assert (s.n, s.c, s.d) == ((1, 1, 1, 1, 1), Fraction(-11, 2), 0)
    assert str(s) == "{1,1,1,1,1; c=-11/2}"
    s = to_signature(CHI_A_MINUS, SPLIT)
    assert (s.n, s.c) == ((1, 1, 2, 1, 1), -5)
    s = to_signature(shifted_reflect(ONES, TOP, E6), SPLIT)
    assert (s.n, s.c, s.d) == ((1, 1, 1, 1, 1), Fraction(11, 2), 11)


def test_m_dominance():
    assert is_m_dominant(CHI_A_MINUS, SPLIT)
    assert is_m_dominant(ONES, SPLIT)
    assert not is_m_dominant(ShiftedWeight((-1, 5, 1, 1, 1, 1)), SPLIT)
    wall = ShiftedWeight((0, 1, 1, 1, 1, 1))
    assert not is_m_dominant(wall, SPLIT) and is_m_dominant(wall, SPLIT, strict=False)


def test_unshifted():
    assert ONES.unshifted() == (0,) * 6


labels = st.tuples(*[st.integers(-20, 20)] * 6).map(ShiftedWeight)
dominant = st.tuples(*[st.integers(1, 30)] * 6).map(ShiftedWeight)


@settings(max_examples=1000, deadline=None)
@given(labels, st.sampled_from(E6.positive_roots))
def test_param_matches_bilinear_form(w, beta):
    assert hc_param(w, beta) == param_by_form(w.labels, beta)


@settings(max_examples=1000, deadline=None)
@given(labels)
def test_two_c_is_minus_top_param(w):
    s = to_signature(w, SPLIT)
    assert s.two_c == -param_by_form(w.labels, TOP)
    assert s.d - s.c == Fraction(11, 2)


@settings(max_examples=300, deadline=None)
@given(dominant)
def test_top_reflection_of_dominant_weight(w):
    plus = shifted_reflect(w, TOP, E6)
    assert to_signature(plus, SPLIT).d >= 11
    assert all(hc_param(plus, b) < 0 for b in SPLIT.noncompact_roots)
