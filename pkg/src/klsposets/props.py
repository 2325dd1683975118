"""Palindromicity, gamma vectors, unimodality, real-rootedness, Veronese transforms.

Everything is exact: integers, and Fractions inside Sturm sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

from .errors import DegreeTooSmall, NotPalindromic, ZeroPolynomial
from .polynomial import IntPolynomial, poly_rev


def is_palindromic(p: IntPolynomial, d: int) -> bool:
    if p.degree > d:
        return False
    return poly_rev(p, d) == p


@dataclass(frozen=True)
class GammaDecomposition:
    degree: int
    gamma: tuple[int, ...]

    @property
    def positive(self) -> bool:
        return all(c >= 0 for c in self.gamma)

    def reconstruct(self) -> IntPolynomial:
        one_plus_x = IntPolynomial([1, 1])
        total = IntPolynomial()
        for i, c in enumerate(self.gamma):
            total = total + IntPolynomial.monomial(i, c) * one_plus_x ** (self.degree - 2 * i)
        return total


def gamma_vector(p: IntPolynomial, d: int) -> GammaDecomposition:
    """Write p as ``sum_i gamma_i x^i (1 + x)^{d - 2i}``.

    Peels off the lowest remaining coefficient at each step; palindromicity
    makes this the same as peeling from the top.
    """
    if not is_palindromic(p, d):
        raise NotPalindromic(f"{p} is not palindromic of degree {d}")
    rest = list(p.coeffs) + [0] * (d + 1 - len(p.coeffs))
    gamma = []
    for i in range(d // 2 + 1):
        c = rest[i]
        gamma.append(c)
        if c:
            # subtract c * x^i * (1+x)^(d-2i)
            m = d - 2 * i
            for k in range(m + 1):
                rest[i + k] -= c * comb(m, k)
    assert not any(rest), "gamma peeling left a remainder"
    return GammaDecomposition(d, tuple(gamma))


def is_unimodal(p: IntPolynomial) -> bool:
    c = p.coeffs
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


def is_nonneg(p: IntPolynomial) -> bool:
    return all(c >= 0 for c in p.coeffs)


# -- Sturm sequences over Q ----------------------------------------------------


def _primitive(coeffs: list[Fraction]) -> list[Fraction]:
    """Scale by a positive rational to a primitive integer vector (sign preserved)."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    g = g or 1
    return [Fraction(v // g) for v in ints]


def _strip(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] -= factor * bc
        _strip(a)
    return a


def _derivative(c: Sequence) -> list:
    return [i * c[i] for i in range(1, len(c))]


def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    if p.is_zero():
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    seq = [_primitive([Fraction(c) for c in p.coeffs])]
    d = _derivative(seq[0])
    if _strip(d):
        seq.append(_primitive(d))
    while len(seq[-1]) > 1:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_primitive([-c for c in r]))
    return seq


def _sign_changes(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_count(p: IntPolynomial) -> int:
    """Number of distinct real roots."""
    seq = sturm_sequence(p)
    at_pos = [1 if q[-1] > 0 else -1 for q in seq]
    at_neg = [(1 if q[-1] > 0 else -1) * (-1) ** (len(q) - 1) for q in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _rem(a, b)
    return a


def is_real_rooted(p: IntPolynomial) -> bool:
    """True iff every complex root of p is real (with multiplicity)."""
    if p.is_zero():
        raise ZeroPolynomial("real-rootedness of the zero polynomial")
    if p.degree <= 0:
        return True
    c = [Fraction(v) for v in p.coeffs]
    repeated = len(_poly_gcd(c, _strip(_derivative(c)))) - 1
    squarefree_degree = p.degree - repeated
    return real_root_count(p) == squarefree_degree


# -- Veronese transforms -------------------------------------------------------


def veronese(h: Sequence[int], d: int, m: int) -> list[int]:
    """m-th Veronese transform of ``h_0..h_r`` with respect to degree d.

    ``a_n = sum_i h_i C(n - i + d, d)`` are the series coefficients of
    ``h(x) / (1 - x)^{d+1}``; the result is the numerator of the series
    ``sum_n a_{mn} x^n`` over the same denominator.
    """
    if m < 1:
        raise ValueError("Veronese order must be at least 1")
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    if d < len(h) - 1:
        raise DegreeTooSmall(f"reference degree {d} below sequence degree {len(h) - 1}")
    binom = {}

    def C(a: int, b: int) -> int:
        if a < b or a < 0:
            return 0
        key = (a, b)
        if key not in binom:
            binom[key] = comb(a, b)
        return binom[key]

    a = [sum(hi * C(n - i + d, d) for i, hi in enumerate(h)) for n in range(m * d + 1)]
    return [
        sum((-1) ** (j - k) * C(d + 1, j - k) * a[m * k] for k in range(j + 1))
        for j in range(d + 1)
    ]


def veronese_inverse(h_prime: Sequence[int], d: int, m: int) -> list[Fraction]:
    """Recover the original sequence (padded to length d + 1) from its m-th transform.

    The transformed sequence gives a_{mk}; when the original numerator does
    not vanish at 1 these are values of a degree-d polynomial in n, which is
    interpolated and resampled at n = 0..d.
    """
    samples = [
        sum(hi * comb(k - i + d, d) for i, hi in enumerate(h_prime) if k >= i)
        for k in range(d + 1)
    ]
    xs = [m * k for k in range(d + 1)]

    def interp(n: int) -> Fraction:
        total = Fraction(0)
        for j, xj in enumerate(xs):
            term = Fraction(samples[j])
            for i, xi in enumerate(xs):
                if i != j:
                    term *= Fraction(n - xi, xj - xi)
            total += term
        return total

    a = [interp(n) for n in range(d + 1)]
    return [
        sum((-1) ** (j - k) * comb(d + 1, j - k) * a[k] for k in range(j + 1))
        for j in range(d + 1)
    ]


def property_profile(p: IntPolynomial, d: int) -> dict:
    """The JSON property record used by the CLI."""
    pal = is_palindromic(p, d)
    gamma = gamma_vector(p, d) if pal else None
    return {
        "palindromic": pal,
        "gamma": list(gamma.gamma) if gamma else None,
        "gamma_positive": bool(gamma and gamma.positive),
        "unimodal": is_unimodal(p),
        "real_rooted": False if p.is_zero() else is_real_rooted(p),
    }
