"""Interval-by-interval checks of the identities relating P and its interval poset."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .isomorphism import is_isomorphic
from .kls import (
    be_toric,
    be_z,
    chow_function,
    eulerian_kernel,
    kls_left,
    kls_right,
    toric_h_from_g,
    z_from_kls,
)
from .polynomial import IntPolynomial
from .poset import IntervalPoset, Poset, dual, interval_poset, is_eulerian
from .props import veronese


@dataclass
class Failure:
    interval: Any
    lhs: Optional[IntPolynomial]
    rhs: Optional[IntPolynomial]

    def to_dict(self) -> dict:
        return {
            "interval": self.interval,
            "lhs": None if self.lhs is None else self.lhs.to_list(),
            "rhs": None if self.rhs is None else self.rhs.to_list(),
        }


@dataclass
class VerificationReport:
    theorem: str
    failures: list[Failure] = field(default_factory=list)
    checked: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, interval, lhs, rhs) -> None:
        self.checked += 1
        if lhs != rhs:
            self.failures.append(Failure(interval, lhs, rhs))

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "pass": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "checked": self.checked,
        }
        if self.note:
            out["note"] = self.note
        return out


def _iv(P: Poset, s: int, t: int) -> list[str]:
    return [P.labels[s], P.labels[t]]


def _precondition_failure(theorem: str, P: Poset) -> VerificationReport:
    rep = VerificationReport(theorem, note=f"{P.name or 'poset'} is not Eulerian")
    rep.failures.append(Failure(None, None, None))
    return rep


def toric_f_duality_check(P: Poset) -> VerificationReport:
    """Right KLS of P equals left KLS of the dual, read on the reversed interval."""
    rep = VerificationReport("duality")
    if not is_eulerian(P):
        return _precondition_failure("duality", P)
    f = kls_right(P, eulerian_kernel(P))
    Pd = dual(P)
    gd = kls_left(Pd, eulerian_kernel(Pd))
    for (s, t), val in f.items():
        rep.check(_iv(P, s, t), val, gd[(t, s)])
    return rep


def verify_rank_lemma(P: Poset, hat: Optional[IntervalPoset] = None) -> VerificationReport:
    """Both rank formulas for the interval poset, on every nested pair."""
    hat = hat or interval_poset(P)
    Q = hat.poset
    rep = VerificationReport("rank_lemma")
    empty = hat.empty

    def const(k):
        return IntPolynomial.constant(k)

    for u, v in P.intervals:
        big = hat.element(u, v)
        rep.check([_iv(P, u, v), "∅"], const(Q.rho(big, empty)), const(1 + P.rho(u, v)))
        for s in P.interval_elements(u, v):
            for t in P.interval_elements(s, v):
                small = hat.element(s, t)
                if not Q.leq(big, small):
                    rep.check([_iv(P, u, v), _iv(P, s, t)], const(-1), const(0))
                    continue
                rep.check(
                    [_iv(P, u, v), _iv(P, s, t)],
                    const(Q.rho(big, small)),
                    const(P.rho(u, s) + P.rho(t, v)),
                )
    return rep


def verify_lindstrom(P: Poset, hat: Optional[IntervalPoset] = None) -> VerificationReport:
    """Eulerian P has an Eulerian interval poset (vacuous otherwise)."""
    rep = VerificationReport("lindstrom")
    if not is_eulerian(P):
        rep.note = "not Eulerian; nothing to check"
        return rep
    hat = hat or interval_poset(P)
    rep.check("P̂", IntPolynomial.constant(int(is_eulerian(hat.poset))), IntPolynomial.constant(1))
    return rep


def verify_ghat_formula(P: Poset, hat: Optional[IntervalPoset] = None) -> VerificationReport:
    """Toric g of the interval poset at ([u,v], [s,t]) is ``g_us * f_tv``."""
    if not is_eulerian(P):
        return _precondition_failure("ghat_formula", P)
    rep = VerificationReport("ghat_formula")
    eps = eulerian_kernel(P)
    g = kls_left(P, eps, check=False)
    f = kls_right(P, eps, check=False)
    hat = hat or interval_poset(P)
    Q = hat.poset
    ghat = kls_left(Q, eulerian_kernel(Q), check=False)
    for u, v in P.intervals:
        big = hat.element(u, v)
        for s in P.interval_elements(u, v):
            for t in P.interval_elements(s, v):
                rep.check(
                    [_iv(P, u, v), _iv(P, s, t)],
                    ghat[(big, hat.element(s, t))],
                    g[(u, s)] * f[(t, v)],
                )
    return rep


def verify_z_equals_hhat(
    P: Poset,
    hat: Optional[IntervalPoset] = None,
    *,
    be: bool = False,
    truncation: str = "paper",
) -> VerificationReport:
    """``Z_uv`` of P against toric h of the interval poset at ([u,v], ∅), for all u <= v.

    With ``be=True`` both sides use the Bayer–Ehrenborg definitions, which
    apply to non-Eulerian posets too (where the identity may fail).
    """
    name = "z_equals_hhat_be" if be else "z_equals_hhat"
    hat = hat or interval_poset(P)
    Q = hat.poset
    if be:
        z = be_z(P, truncation)
        _, hhat = be_toric(Q, truncation)
    else:
        if not is_eulerian(P):
            return _precondition_failure(name, P)
        eps = eulerian_kernel(P)
        z = z_from_kls(kls_left(P, eps, check=False), kls_right(P, eps, check=False))
        hhat = toric_h_from_g(kls_left(Q, eulerian_kernel(Q), check=False))
    rep = VerificationReport(name)
    empty = hat.empty
    for (u, v), val in z.items():
        rep.check(_iv(P, u, v), val, hhat[(hat.element(u, v), empty)])
    return rep


def verify_chow_veronese(P: Poset, hat: Optional[IntervalPoset] = None) -> VerificationReport:
    """Chow polynomial of the interval poset is the second Veronese transform of P's.

    Checked on every interval [u, v]: the interval poset of [u, v] is the
    upper set of [u, v] in the interval poset of P.
    """
    if not is_eulerian(P):
        return _precondition_failure("chow_veronese", P)
    rep = VerificationReport("chow_veronese")
    hat = hat or interval_poset(P)
    H = chow_function(P)
    Hhat = chow_function(hat.poset)
    empty = hat.empty
    for (u, v), val in H.items():
        expected = IntPolynomial(veronese(val.coeffs, P.rho(u, v), 2))
        rep.check(_iv(P, u, v), Hhat[(hat.element(u, v), empty)], expected)
    return rep


def verify_cross_polytope(r: int) -> VerificationReport:
    """Interval poset of the rank-r Boolean lattice against the r-dimensional cross-polytope."""
    from .generators import boolean, cross_polytope_faces

    rep = VerificationReport("cross_polytope")
    ok = is_isomorphic(interval_poset(boolean(r)).poset, cross_polytope_faces(r))
    rep.check(f"B{r}", IntPolynomial.constant(int(ok)), IntPolynomial.constant(1))
    return rep


THEOREMS = {
    "ghat_formula": verify_ghat_formula,
    "z_equals_hhat": verify_z_equals_hhat,
    "chow_veronese": verify_chow_veronese,
    "lindstrom": verify_lindstrom,
    "rank_lemma": verify_rank_lemma,
    "duality": lambda P, hat=None: toric_f_duality_check(P),
}
