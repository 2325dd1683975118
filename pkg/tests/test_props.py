from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from klsposets.errors import DegreeTooSmall, NotPalindromic
from klsposets.kls import chow_function
from klsposets.polynomial import IntPolynomial
from klsposets.props import (
    GammaDecomposition,
    gamma_vector,
    is_nonneg,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    property_profile,
    real_root_count,
    sturm_sequence,
    veronese,
    veronese_inverse,
)
from klsposets.suite import eulerian_suite

P_ = IntPolynomial
x = sympy.Symbol("x")


def test_palindromic():
    assert is_palindromic(P_([1, 0, -2, 0, 1]), 4)
    assert is_palindromic(P_([0, 1]), 2)
    assert not is_palindromic(P_([1, 2]), 2)
    assert not is_palindromic(P_([1, 2, 1]), 1)


@pytest.mark.parametrize(
    "p, d, gamma",
    [
        ([1, 0, -2, 0, 1], 4, [1, -4, 0]),
        ([1, 4, 1], 2, [1, 2]),
        ([1, 11, 11, 1], 3, [1, 8]),
        ([1, 2, 1], 2, [1, 0]),
        ([0, 1], 2, [0, 1]),
    ],
)
def test_gamma_examples(p, d, gamma):
    dec = gamma_vector(P_(p), d)
    assert list(dec.gamma) == gamma
    assert dec.reconstruct() == P_(p)


def test_gamma_requires_palindromic():
    with pytest.raises(NotPalindromic):
        gamma_vector(P_([1, 2]), 2)


@given(st.integers(0, 8).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-50, 50),
                                                                             min_size=d // 2 + 1, max_size=d // 2 + 1))))
def test_gamma_round_trip(case):
    d, gamma = case
    p = GammaDecomposition(d, tuple(gamma)).reconstruct()
    assert is_palindromic(p, d)
    assert list(gamma_vector(p, d).gamma) == gamma


def test_unimodal_and_nonneg():
    assert is_unimodal(P_([1, 3, 3, 1]))
    assert is_unimodal(P_([1, 1, 1]))
    assert not is_unimodal(P_([1, 0, 1]))
    assert not is_unimodal(P_([1, 0, -2, 0, 1]))
    assert is_nonneg(P_([0, 2]))
    assert not is_nonneg(P_([1, -1]))


# -- Sturm -----------------------------------------------------------------------


def sympy_roots(coeffs):
    poly = sympy.Poly(list(reversed(coeffs)), x)
    roots = sympy.real_roots(poly)
    return len(set(roots)), len(roots) == poly.degree()


@pytest.mark.parametrize(
    "p",
    [[1, 4, 1], [1, 0, -2, 0, 1], [1, 0, 1], [-1, 0, 0, 1], [1, 2, 1], [2, -3, 1], [0, 0, 1], [1, 1, 1, 1]],
)
def test_sturm_examples(p):
    count, rooted = sympy_roots(p)
    assert real_root_count(P_(p)) == count
    assert is_real_rooted(P_(p)) == rooted


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_sturm_matches_sympy(coeffs):
    count, rooted = sympy_roots(coeffs)
    assert real_root_count(P_(coeffs)) == count
    assert is_real_rooted(P_(coeffs)) == rooted


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_products_of_linear_factors_are_real_rooted(roots):
    p = P_([1])
    for r in roots:
        p = p * P_([-r, 1])
    assert is_real_rooted(p)


def test_sturm_sequence_starts_with_p_and_derivative():
    # rows are stored up to a positive scalar
    seq = sturm_sequence(P_([1, 4, 1]))
    assert seq[0] == [1, 4, 1]
    ratio = Fraction(4) / seq[1][0]
    assert ratio > 0 and [ratio * c for c in seq[1]] == [4, 2]


def test_chow_polynomials_real_rooted_and_gamma_positive():
    for P in eulerian_suite():
        H = chow_function(P)[(P.bottom, P.top)]
        d = P.height - 1
        assert is_palindromic(H, d)
        if is_real_rooted(H):
            assert gamma_vector(H, d).positive


# -- Veronese --------------------------------------------------------------------


def series_oracle(h, d, m):
    """Numerator of sum_n a_{mn} x^n over (1 - x)^{d+1}, via a sympy series."""
    expr = sum(c * x**i for i, c in enumerate(h)) / (1 - x) ** (d + 1)
    N = m * d + 1
    ser = sympy.series(expr, x, 0, N).removeO()
    a = [ser.coeff(x, n) for n in range(N)]
    sampled = sum(a[m * k] * x**k for k in range(d + 1))
    num = sympy.expand(sampled * (1 - x) ** (d + 1))
    return [int(num.coeff(x, j)) for j in range(d + 1)]


@pytest.mark.parametrize(
    "h, d, m, expected",
    [
        ([1, 1], 2, 2, [1, 6, 1]),
        ([1], 1, 2, [1, 1]),
        ([1], 0, 5, [1]),
        ([1, 4, 1], 3, 2, None),
        ([1, 11, 11, 1], 4, 3, None),
    ],
)
def test_veronese_examples(h, d, m, expected):
    out = veronese(h, d, m)
    assert out == series_oracle(h, d, m)
    if expected is not None:
        assert out == expected


@given(st.integers(0, 4).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-9, 9), max_size=d + 1))),
       st.integers(1, 4))
def test_veronese_matches_series(case, m):
    d, h = case
    assert veronese(h, d, m) == series_oracle(h, d, m)


@given(st.integers(0, 5).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-9, 9), max_size=d + 1))))
def test_veronese_identity(case):
    d, h = case
    out = veronese(h, d, 1)
    assert out == list(h) + [0] * (d + 1 - len(h))


@given(st.integers(0, 5).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-9, 9), max_size=d + 1))),
       st.integers(1, 4))
def test_veronese_round_trip(case, m):
    d, h = case
    back = veronese_inverse(veronese(h, d, m), d, m)
    assert back == [Fraction(c) for c in list(h) + [0] * (d + 1 - len(h))]


def test_veronese_degree_too_small():
    with pytest.raises(DegreeTooSmall):
        veronese([1, 2, 3], 1, 2)


def test_property_profile_schema():
    prof = property_profile(P_([1, 0, -2, 0, 1]), 4)
    assert prof == {"palindromic": True, "gamma": [1, -4, 0], "gamma_positive": False,
                    "unimodal": False, "real_rooted": True}
    prof = property_profile(P_([1, 2]), 2)
    assert prof["palindromic"] is False and prof["gamma"] is None
