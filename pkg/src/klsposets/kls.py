"""Kazhdan–Lusztig–Stanley functions, Z-functions, toric h and Chow functions.

Every table is filled in a single pass over ``Poset.intervals`` (sorted by
interval length), so each recursion only reads entries of shorter intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .errors import AntisymmetryViolation, FormulaMismatch, NotAKernel
from .incidence import IncidenceElement, convolve, invert, is_kernel, rev_element
from .polynomial import ONE, ZERO, IntPolynomial, poly_div_x_minus_1, poly_rev, sum_of_products, x_minus_1_power
from .poset import Poset, dual, zeta_poly_values

TRUNCATIONS = ("paper", "strict")


def eulerian_kernel(P: Poset) -> IncidenceElement:
    """``eps_st = (x - 1)^{rho_st}``."""
    powers = [x_minus_1_power(k) for k in range(P.height + 1)]
    return IncidenceElement(P, [powers[r] for r in P.interval_rho])


def epsilon_bar(P: Poset) -> IncidenceElement:
    """``-1`` on the diagonal, ``(x - 1)^{rho_st - 1}`` above it."""
    powers = [x_minus_1_power(k) for k in range(P.height + 1)]
    minus_one = IntPolynomial.constant(-1)
    return IncidenceElement(P, [powers[r - 1] if r else minus_one for r in P.interval_rho])


def _check_traversal(P: Poset, traversal: Optional[Sequence[int]]) -> Sequence[int]:
    if traversal is None:
        return range(len(P.intervals))
    rho = P.interval_rho
    if sorted(traversal) != list(range(len(P.intervals))):
        raise ValueError("traversal must be a permutation of the interval ids")
    if any(rho[a] > rho[b] for a, b in zip(traversal, traversal[1:])):
        raise ValueError("traversal must visit intervals in nondecreasing length")
    return traversal


def _kls(P: Poset, k: IncidenceElement, right: bool, traversal, check: bool) -> IncidenceElement:
    if check and not is_kernel(P, k):
        raise NotAKernel(f"the given element is not a {P.name or 'P'}-kernel")
    kt = k.table
    rho = P.interval_rho
    facs = P.factorizations
    out: list[Optional[IntPolynomial]] = [None] * len(kt)
    for i in _check_traversal(P, traversal):
        r = rho[i]
        if r == 0:
            out[i] = ONE
            continue
        fac = facs[i]
        if right:
            # f^rev = k f  =>  f^rev - f = sum_{s < w <= t} k_sw f_wt
            q = sum_of_products((kt[a], out[b]) for a, b in fac[1:])
        else:
            # g^rev = g k  =>  g^rev - g = sum_{s <= w < t} g_sw k_wt
            q = sum_of_products((out[a], kt[b]) for a, b in fac[:-1])
        if poly_rev(q, r) != -q:
            s, t = P.intervals[i]
            raise AntisymmetryViolation(
                f"q at [{P.labels[s]},{P.labels[t]}] is not antisymmetric: {q}"
            )
        out[i] = (-q).truncate((r - 1) // 2)
    return IncidenceElement(P, out)


def kls_right(P: Poset, k: IncidenceElement, *, traversal=None, check: bool = True) -> IncidenceElement:
    """Right KLS function f: ``f_ss = 1``, ``deg f_st < rho_st / 2``, ``f^rev = k f``."""
    return _kls(P, k, True, traversal, check)


def kls_left(P: Poset, k: IncidenceElement, *, traversal=None, check: bool = True) -> IncidenceElement:
    """Left KLS function g: ``g_ss = 1``, ``deg g_st < rho_st / 2``, ``g^rev = g k``."""
    return _kls(P, k, False, traversal, check)


def z_from_kls(g: IncidenceElement, f: IncidenceElement) -> IncidenceElement:
    """``Z = g^rev f``, cross-checked against ``g f^rev``."""
    z1 = convolve(rev_element(g), f)
    z2 = convolve(g, rev_element(f))
    if z1 != z2:
        st, a, b = z1.differences(z2)[0]
        raise FormulaMismatch(f"g^rev f and g f^rev differ at {st}: {a} vs {b}")
    return z1


def z_function(P: Poset, k: IncidenceElement) -> IncidenceElement:
    g = kls_left(P, k)
    f = kls_right(P, k, check=False)
    return z_from_kls(g, f)


def toric_h_from_g(g: IncidenceElement) -> IncidenceElement:
    """``h_st = (g_st^rev - g_st) / (x - 1)``; zero on the diagonal."""
    P = g.poset
    return IncidenceElement(
        P, [poly_div_x_minus_1(poly_rev(p, r) - p) for p, r in zip(g.table, P.interval_rho)]
    )


def toric_g(P: Poset) -> IncidenceElement:
    """Left KLS function of the Eulerian kernel (raises NotAKernel if P is not Eulerian)."""
    return kls_left(P, eulerian_kernel(P))


def toric_h(P: Poset) -> IncidenceElement:
    return toric_h_from_g(toric_g(P))


def chow_function(P: Poset) -> IncidenceElement:
    """``H = -(epsilon_bar)^{-1}``."""
    return -invert(epsilon_bar(P))


def chow_via_zeta_oracle(P: Poset) -> IntPolynomial:
    """Chow polynomial at [0̂, 1̂] recovered from multichain counts.

    Uses ``sum_n zeta(n+1) x^n = H(x) / (1 - x)^{r+1}``: the numerator is the
    first r + 1 terms of the series times ``(1 - x)^{r+1}``.
    """
    r = P.height
    vals = zeta_poly_values(P, r + 1)
    coeffs = [
        sum((-1) ** (j - k) * comb(r + 1, j - k) * vals[k + 1] for k in range(j + 1))
        for j in range(r + 1)
    ]
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class KlsBundle:
    poset: Poset
    kernel: IncidenceElement
    f: IncidenceElement
    g: IncidenceElement
    z: IncidenceElement
    h: Optional[IncidenceElement] = None


def kls_bundle(P: Poset, kernel: Optional[IncidenceElement] = None) -> KlsBundle:
    """f, g and Z for ``kernel`` (default: the Eulerian kernel, which also yields toric h)."""
    eulerian = kernel is None
    if eulerian:
        kernel = eulerian_kernel(P)
    g = kls_left(P, kernel)
    f = kls_right(P, kernel, check=False)
    z = z_from_kls(g, f)
    h = toric_h_from_g(g) if eulerian else None
    return KlsBundle(P, kernel, f, g, z, h)


# -- Bayer–Ehrenborg toric g/h for arbitrary graded posets -------------------


def _trunc_bound(r: int, truncation: str) -> int:
    if truncation == "paper":
        return r // 2
    if truncation == "strict":
        return (r - 1) // 2
    raise ValueError(f"unknown truncation variant {truncation!r}")


def be_toric(P: Poset, truncation: str = "paper") -> tuple[IncidenceElement, IncidenceElement]:
    """Toric (g, h) by the double recursion valid for any graded poset.

    ``h_st = sum_{s <= w < t} g_sw (x - 1)^{rho_wt - 1}`` and ``g_st`` is
    ``(1 - x) h_st`` truncated to degree ``floor(rho_st / 2)`` (``"paper"``)
    or ``floor((rho_st - 1) / 2)`` (``"strict"``). Diagonal entries are 1.
    """
    powers = [x_minus_1_power(k) for k in range(P.height + 1)]
    one_minus_x = IntPolynomial([1, -1])
    rho = P.interval_rho
    g: list[IntPolynomial] = [ZERO] * len(rho)
    h: list[IntPolynomial] = [ZERO] * len(rho)
    for i, fac in enumerate(P.factorizations):
        r = rho[i]
        if r == 0:
            g[i] = h[i] = ONE
            continue
        h[i] = sum_of_products((g[a], powers[rho[b] - 1]) for a, b in fac[:-1])
        g[i] = (one_minus_x * h[i]).truncate(_trunc_bound(r, truncation))
    return IncidenceElement(P, g), IncidenceElement(P, h)


def be_z(P: Poset, truncation: str = "paper") -> IncidenceElement:
    """``Z_st = sum_w x^{rho_sw} g_sw(1/x) f_wt`` with ``f_wt`` the toric g of [t, w] in the dual."""
    g, _ = be_toric(P, truncation)
    Pd = dual(P)
    gd, _ = be_toric(Pd, truncation)
    f_table = [gd[(t, s)] for s, t in P.intervals]
    g_rev = [poly_rev(p, r) for p, r in zip(g.table, P.interval_rho)]
    table = [sum_of_products((g_rev[a], f_table[b]) for a, b in fac) for fac in P.factorizations]
    return IncidenceElement(P, table)
