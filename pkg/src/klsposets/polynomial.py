"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DegreeExceeded, NotDivisible


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Immutable polynomial stored as an ascending coefficient tuple.

    The zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim([int(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> IntPolynomial:
        # caller guarantees coeffs is already trimmed
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        if not c:
            return ZERO
        return cls._raw((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __neg__(self):
        return IntPolynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return IntPolynomial._raw(tuple(c * other for c in self.coeffs))
        return IntPolynomial._raw(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def rev(self, d: int) -> IntPolynomial:
        return poly_rev(self, d)

    def truncate(self, m: int) -> IntPolynomial:
        """Drop every term of degree greater than ``m``."""
        if m < 0:
            return ZERO
        return IntPolynomial._raw(_trim(list(self.coeffs[: m + 1])))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def _mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def sum_of_products(pairs: Iterable[tuple[IntPolynomial, IntPolynomial]]) -> IntPolynomial:
    """Return ``sum(p * q for p, q in pairs)`` with a single accumulator."""
    acc: list[int] = []
    for p, q in pairs:
        a, b = p.coeffs, q.coeffs
        if not a or not b:
            continue
        need = len(a) + len(b) - 1
        if len(acc) < need:
            acc.extend([0] * (need - len(acc)))
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    acc[i + j] += ai * bj
    return IntPolynomial._raw(_trim(acc))


def poly_rev(p: IntPolynomial, d: int) -> IntPolynomial:
    """``x^d * p(1/x)``; coefficient i of the result is coefficient d - i of p."""
    if p.degree > d:
        raise DegreeExceeded(f"degree {p.degree} exceeds bound {d}")
    padded = list(p.coeffs) + [0] * (d + 1 - len(p.coeffs))
    return IntPolynomial._raw(_trim(padded[::-1]))


def poly_div_x_minus_1(p: IntPolynomial) -> IntPolynomial:
    """Exact quotient of ``p`` by ``x - 1`` (synthetic division at 1)."""
    c = p.coeffs
    if not c:
        return ZERO
    if sum(c) != 0:
        raise NotDivisible(f"{format_poly(c)} does not vanish at x = 1")
    # q_{k-1} = c_k + q_k, descending from the top
    n = len(c) - 1
    q = [0] * n
    carry = 0
    for k in range(n, 0, -1):
        carry += c[k]
        q[k - 1] = carry
    return IntPolynomial._raw(_trim(q))


def x_minus_1_power(k: int) -> IntPolynomial:
    """``(x - 1)^k`` by binomial expansion."""
    coeffs = []
    c = 1
    for i in range(k + 1):
        # coefficient of x^i is C(k, i) * (-1)^(k - i)
        coeffs.append(c if (k - i) % 2 == 0 else -c)
        c = c * (k - i) // (i + 1)
    return IntPolynomial._raw(tuple(coeffs))


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Human-readable rendering, lowest degree first: ``1 - 2x^2 + x^4``."""
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
X = IntPolynomial([0, 1])
