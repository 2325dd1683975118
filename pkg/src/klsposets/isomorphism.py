"""Order isomorphism for small posets (backtracking with invariant pruning)."""

from __future__ import annotations

from collections import Counter

from .errors import TooLarge
from .poset import Poset

MAX_ELEMENTS = 64


def _signatures(P: Poset) -> tuple[tuple[int, ...], ...]:
    return tuple(
        (
            P.rank[x],
            len(P.upper_covers[x]),
            len(P.lower_covers[x]),
            bin(P.up_mask(x)).count("1"),
            bin(P.down_mask(x)).count("1"),
        )
        for x in range(P.n)
    )


def _refined(P: Poset) -> tuple:
    """One round of refinement: own signature plus the multisets of neighbour signatures."""
    base = _signatures(P)
    return tuple(
        (
            base[x],
            tuple(sorted(base[y] for y in P.upper_covers[x])),
            tuple(sorted(base[y] for y in P.lower_covers[x])),
        )
        for x in range(P.n)
    )


def invariant_key(P: Poset) -> tuple:
    """Isomorphism invariant; equal for isomorphic posets, usually distinct otherwise."""
    return (P.n, tuple(sorted(_refined(P))))


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    if P.n > MAX_ELEMENTS or Q.n > MAX_ELEMENTS:
        raise TooLarge(f"isomorphism search is limited to {MAX_ELEMENTS} elements")
    return find_isomorphism(P, Q) is not None


def find_isomorphism(P: Poset, Q: Poset):
    """Return a list ``phi`` with ``phi[x]`` the image of x, or None."""
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return None
    sp, sq = _refined(P), _refined(Q)
    if Counter(sp) != Counter(sq):
        return None
    candidates = {}
    for y in Q.linext:
        candidates.setdefault(sq[y], []).append(y)

    order = list(P.linext)
    phi = [-1] * P.n
    used = [False] * Q.n

    def consistent(x: int, y: int, depth: int) -> bool:
        for i in range(depth):
            a = order[i]
            b = phi[a]
            if P.leq(a, x) != Q.leq(b, y) or P.leq(x, a) != Q.leq(y, b):
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        x = order[depth]
        for y in candidates[sp[x]]:
            if not used[y] and consistent(x, y, depth):
                phi[x] = y
                used[y] = True
                if extend(depth + 1):
                    return True
                used[y] = False
        phi[x] = -1
        return False

    return phi if extend(0) else None
