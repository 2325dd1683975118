"""Incidence algebra of a graded poset over Z[x].

An :class:`IncidenceElement` is a flat table of polynomials indexed by the
poset's interval ids (``Poset.intervals``), which are sorted by interval
length. Every recursion below walks that order, so entries it depends on are
always already computed.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .errors import DegreeExceeded, NonUnitDiagonal, PosetMismatch
from .polynomial import ONE, ZERO, IntPolynomial, poly_rev, sum_of_products


class IncidenceElement:
    __slots__ = ("poset", "table")

    def __init__(self, poset, table):
        if len(table) != len(poset.intervals):
            raise ValueError("table size does not match the number of intervals")
        self.poset = poset
        self.table = tuple(table)

    @classmethod
    def from_function(cls, poset, fn: Callable[[int, int], IntPolynomial]) -> IncidenceElement:
        return cls(poset, [fn(s, t) for s, t in poset.intervals])

    def __getitem__(self, st: tuple[int, int]) -> IntPolynomial:
        return self.table[self.poset.interval_index[st]]

    def items(self) -> Iterator[tuple[tuple[int, int], IntPolynomial]]:
        return zip(self.poset.intervals, self.table)

    def __eq__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        if self.table != other.table:
            return False
        return self.poset is other.poset or self.poset == other.poset

    def __hash__(self):
        return hash(self.table)

    def __neg__(self):
        return IncidenceElement(self.poset, [-p for p in self.table])

    def __mul__(self, other):
        return convolve(self, other)

    def __repr__(self):
        return f"<IncidenceElement on {self.poset!r}>"

    def differences(self, other: IncidenceElement):
        """Intervals where the two tables disagree, with both values."""
        _check_same(self, other)
        return [(st, a, b) for st, a, b in zip(self.poset.intervals, self.table, other.table) if a != b]


def _check_same(a: IncidenceElement, b: IncidenceElement) -> None:
    if a.poset is not b.poset and a.poset != b.poset:
        raise PosetMismatch("incidence elements live on different posets")


def delta(P) -> IncidenceElement:
    return IncidenceElement.from_function(P, lambda s, t: ONE if s == t else ZERO)


def zeta(P) -> IncidenceElement:
    return IncidenceElement(P, [ONE] * len(P.intervals))


def convolve(a: IncidenceElement, b: IncidenceElement) -> IncidenceElement:
    """``(ab)_{st} = sum over s <= w <= t of a_{sw} b_{wt}``."""
    _check_same(a, b)
    ta, tb = a.table, b.table
    table = [sum_of_products((ta[i], tb[j]) for i, j in fac) for fac in a.poset.factorizations]
    return IncidenceElement(a.poset, table)


def invert(a: IncidenceElement) -> IncidenceElement:
    """Two-sided inverse of an element whose diagonal entries are +1 or -1."""
    P = a.poset
    ta = a.table
    out: list[IntPolynomial] = [ZERO] * len(ta)
    for k, ((s, t), fac) in enumerate(zip(P.intervals, P.factorizations)):
        if s == t:
            if ta[k] != 1 and ta[k] != -1:
                raise NonUnitDiagonal(f"diagonal entry at {P.labels[s]} is {ta[k]}, not a unit")
            out[k] = ta[k]
            continue
        # fac[-1] is w = t; skip it and solve for b_{st}
        acc = sum_of_products((out[i], ta[j]) for i, j in fac[:-1])
        # a_tt is its own inverse
        out[k] = -acc if ta[fac[-1][1]] == 1 else acc
    return IncidenceElement(P, out)


def rev_element(a: IncidenceElement) -> IncidenceElement:
    """Entrywise reversal ``x^{rho_st} a_st(1/x)``; requires deg a_st <= rho_st."""
    P = a.poset
    table = []
    for (s, t), r, p in zip(P.intervals, P.interval_rho, a.table):
        if p.degree > r:
            raise DegreeExceeded(
                f"entry at [{P.labels[s]},{P.labels[t]}] has degree {p.degree} > {r}", (s, t)
            )
        table.append(poly_rev(p, r))
    return IncidenceElement(P, table)


def in_rho_subalgebra(a: IncidenceElement) -> bool:
    return all(p.degree <= r for p, r in zip(a.table, a.poset.interval_rho))


def is_kernel(P, k: IncidenceElement) -> bool:
    """``k_ss = 1`` everywhere and ``k * k^rev = delta``."""
    if k.poset is not P and k.poset != P:
        raise PosetMismatch("kernel lives on a different poset")
    for (s, t), p in k.items():
        if s == t and p != 1:
            return False
    return convolve(k, rev_element(k)) == delta(k.poset)
