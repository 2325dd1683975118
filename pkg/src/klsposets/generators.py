"""Named families of bounded graded posets."""

from __future__ import annotations

from itertools import product
from typing import Optional

from .errors import ParameterOutOfRange, UnknownKind
from .poset import Poset, build_poset

BOUNDS = {
    "boolean": (0, 8),
    "chain": (0, 64),
    "cube_faces": (1, 4),
    "cross_polytope_faces": (1, 4),
}
FIXED = ("paper_fig1", "paper_fig2")
KINDS = tuple(BOUNDS) + FIXED


def boolean(n: int) -> Poset:
    """Subsets of {1..n} ordered by inclusion."""
    covers = [(S, S | 1 << i) for S in range(1 << n) for i in range(n) if not S >> i & 1]
    labels = ["".join(str(i + 1) for i in range(n) if S >> i & 1) or "∅" for S in range(1 << n)]
    return build_poset(covers, 1 << n, labels, name=f"B{n}")


def chain(n: int) -> Poset:
    """Chain with n + 1 elements (rank n)."""
    return build_poset([(i, i + 1) for i in range(n)], n + 1, [str(i) for i in range(n + 1)],
                       name=f"C{n + 1}")


def cube_faces(d: int) -> Poset:
    """Face lattice of the d-cube, empty face included.

    A nonempty face is a word over {0, 1, *}: fixed coordinates and free ones.
    """
    words = ["".join(w) for w in product("01*", repeat=d)]
    ids = {w: i + 1 for i, w in enumerate(words)}
    covers = [(0, ids[w]) for w in words if "*" not in w]
    for w in words:
        for k, ch in enumerate(w):
            if ch != "*":
                covers.append((ids[w], ids[w[:k] + "*" + w[k + 1:]]))
    return build_poset(covers, len(words) + 1, ["∅"] + words, name=f"cube{d}")


def cross_polytope_faces(d: int) -> Poset:
    """Face lattice of the d-dimensional cross-polytope.

    Proper faces are simplices on vertices ±e_i with no antipodal pair, encoded
    as sign words over {+, -, 0}; the all-zero word is the empty face and the
    polytope itself is added on top.
    """
    words = ["".join(w) for w in product("0+-", repeat=d)]
    ids = {w: i for i, w in enumerate(words)}
    top = len(words)
    covers = []
    for w in words:
        if "0" not in w:
            covers.append((ids[w], top))
        for k, ch in enumerate(w):
            if ch == "0":
                for sign in "+-":
                    covers.append((ids[w], ids[w[:k] + sign + w[k + 1:]]))
    labels = ["∅" if set(w) == {"0"} else w for w in words] + ["P"]
    return build_poset(covers, top + 1, labels, name=f"cross{d}")


def paper_fig1() -> Poset:
    """Rank-3 Eulerian poset: two atoms below two coatoms, not a lattice."""
    labels = ["0̂", "a", "b", "c", "d", "1̂"]
    covers = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)]
    return build_poset(covers, 6, labels, name="fig1")


def paper_fig2() -> Poset:
    """Rank-4 Eulerian poset with two elements on each middle rank, each
    covering both elements of the rank below."""
    labels = ["0̂", "a", "b", "c", "d", "e", "f", "1̂"]
    covers = [(0, 1), (0, 2)]
    covers += [(x, y) for x in (1, 2) for y in (3, 4)]
    covers += [(x, y) for x in (3, 4) for y in (5, 6)]
    covers += [(5, 7), (6, 7)]
    return build_poset(covers, 8, labels, name="fig2")


_BUILDERS = {
    "boolean": boolean,
    "chain": chain,
    "cube_faces": cube_faces,
    "cross_polytope_faces": cross_polytope_faces,
}


def generate(kind: str, n: Optional[int] = None) -> Poset:
    if kind == "paper_fig1":
        fixed = paper_fig1
    elif kind == "paper_fig2":
        fixed = paper_fig2
    elif kind in _BUILDERS:
        lo, hi = BOUNDS[kind]
        if n is None or not lo <= n <= hi:
            raise ParameterOutOfRange(f"{kind} needs a parameter in [{lo}, {hi}], got {n}")
        return _BUILDERS[kind](n)
    else:
        raise UnknownKind(f"unknown poset kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n is not None:
        raise ParameterOutOfRange(f"{kind} takes no parameter")
    return fixed()
