"""Finite bounded graded posets and the poset of intervals.

The order relation is stored as one Python int per element used as a bit
row: bit ``t`` of ``up_mask(s)`` is set iff ``s <= t``.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import CycleDetected, NotBounded, NotGraded, PosetError

# A closed interval (s, t) of a poset, or None for the empty interval.
Interval = Optional[tuple[int, int]]
EMPTY: Interval = None


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Poset:
    """A validated bounded graded poset on elements ``0 .. n-1``.

    Build instances with :func:`build_poset`; the constructor assumes its
    arguments are already consistent.
    """

    def __init__(self, n, covers, rank, labels, up, down, name=""):
        self.n = n
        self.covers = covers
        self.rank = rank
        self.labels = labels
        self.name = name
        self._up = up
        self._down = down
        self.bottom = rank.index(0)
        self.top = max(range(n), key=lambda x: rank[x])
        self.linext = tuple(sorted(range(n), key=lambda x: (rank[x], x)))

    def __len__(self):
        return self.n

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Poset{tag} n={self.n} rank={self.height}>"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return (self.n, self.covers, self.labels) == (other.n, other.covers, other.labels)

    def __hash__(self):
        return hash((self.n, self.covers, self.labels))

    def with_name(self, name: str) -> Poset:
        clone = copy.copy(self)
        clone.name = name
        return clone

    @property
    def height(self) -> int:
        """Rank of the poset, i.e. the rank of its top element."""
        return self.rank[self.top]

    def leq(self, s: int, t: int) -> bool:
        return bool(self._up[s] >> t & 1)

    def lt(self, s: int, t: int) -> bool:
        return s != t and self.leq(s, t)

    def up_mask(self, s: int) -> int:
        return self._up[s]

    def down_mask(self, t: int) -> int:
        return self._down[t]

    def rho(self, s: int, t: int) -> int:
        return self.rank[t] - self.rank[s]

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        ups = [[] for _ in range(self.n)]
        for a, b in self.covers:
            ups[a].append(b)
        return tuple(tuple(u) for u in ups)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        downs = [[] for _ in range(self.n)]
        for a, b in self.covers:
            downs[b].append(a)
        return tuple(tuple(d) for d in downs)

    @cached_property
    def _position(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, x in enumerate(self.linext):
            pos[x] = i
        return tuple(pos)

    def interval_elements(self, s: int, t: int) -> list[int]:
        """Elements of ``[s, t]`` in linear-extension order."""
        members = _bits(self._up[s] & self._down[t])
        pos = self._position
        members.sort(key=pos.__getitem__)
        return members

    @cached_property
    def intervals(self) -> tuple[tuple[int, int], ...]:
        """All closed intervals, sorted by (length, s, t) so recursions run bottom-up."""
        pairs = [(s, t) for s in range(self.n) for t in _bits(self._up[s])]
        pairs.sort(key=lambda st: (self.rank[st[1]] - self.rank[st[0]], st[0], st[1]))
        return tuple(pairs)

    @cached_property
    def interval_index(self) -> dict[tuple[int, int], int]:
        return {st: i for i, st in enumerate(self.intervals)}

    def interval_id(self, s: int, t: int) -> int:
        return self.interval_index[(s, t)]

    @cached_property
    def interval_rho(self) -> tuple[int, ...]:
        r = self.rank
        return tuple(r[t] - r[s] for s, t in self.intervals)

    @cached_property
    def factorizations(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For interval id ``i = [s,t]``: the pairs ``(id[s,w], id[w,t])`` over w in [s,t].

        Pairs are listed in linear-extension order of ``w``, so the first pair
        is ``w = s`` and the last is ``w = t``.
        """
        idx = self.interval_index
        out = []
        for s, t in self.intervals:
            out.append(tuple((idx[(s, w)], idx[(w, t)]) for w in self.interval_elements(s, t)))
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "labels": list(self.labels),
            "covers": [list(c) for c in self.covers],
        }


def build_poset(
    covers: Iterable[Sequence[int]],
    n: int,
    labels: Optional[Sequence[str]] = None,
    name: str = "",
) -> Poset:
    """Validate a cover list and return the bounded graded poset it generates.

    Pairs that are not genuine covers (transitive edges) are accepted and
    dropped from the stored cover list.
    """
    if n < 1:
        raise PosetError("a poset needs at least one element")
    edges = set()
    for pair in covers:
        a, b = (int(v) for v in pair)
        if not (0 <= a < n and 0 <= b < n):
            raise PosetError(f"cover ({a}, {b}) out of range for n={n}")
        if a == b:
            raise CycleDetected(f"self-loop at {a}")
        edges.add((a, b))
    if labels is None:
        labels = [str(i) for i in range(n)]
    elif len(labels) != n:
        raise PosetError(f"expected {n} labels, got {len(labels)}")

    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in edges:
        succ[a].append(b)
        indeg[b] += 1

    # Kahn's algorithm; leftover elements lie on a cycle
    order = []
    stack = [x for x in range(n) if indeg[x] == 0]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    if len(order) != n:
        raise CycleDetected("cover relation contains a directed cycle")

    up = [0] * n
    for x in reversed(order):
        m = 1 << x
        for y in succ[x]:
            m |= up[y]
        up[x] = m
    down = [0] * n
    for x in range(n):
        for y in _bits(up[x]):
            down[y] |= 1 << x

    hasse = []
    for x in range(n):
        strict = up[x] & ~(1 << x)
        shadow = 0
        for z in _bits(strict):
            shadow |= up[z] & ~(1 << z)
        for y in _bits(strict & ~shadow):
            hasse.append((x, y))
    hasse.sort()

    full = (1 << n) - 1
    minimal = [x for x in range(n) if down[x] == 1 << x]
    maximal = [x for x in range(n) if up[x] == 1 << x]
    if len(minimal) != 1 or len(maximal) != 1:
        raise NotBounded(f"{len(minimal)} minimal and {len(maximal)} maximal elements")
    bottom, top = minimal[0], maximal[0]
    if up[bottom] != full or down[top] != full:
        raise NotBounded("no unique minimum/maximum")

    rank = [0] * n
    for x in order:
        for y in succ[x]:
            if rank[x] + 1 > rank[y]:
                rank[y] = rank[x] + 1
    for a, b in hasse:
        if rank[b] != rank[a] + 1:
            raise NotGraded(f"maximal chains through {labels[a]} < {labels[b]} have unequal length")

    return Poset(n, tuple(hasse), tuple(rank), tuple(str(l) for l in labels),
                 tuple(up), tuple(down), name=name)


def poset_from_dict(data: dict) -> Poset:
    """Parse the JSON poset schema ``{"name", "n", "labels", "covers"}``."""
    try:
        n = int(data["n"])
        covers = [tuple(c) for c in data["covers"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PosetError(f"malformed poset description: {exc}") from None
    if any(len(c) != 2 for c in covers):
        raise PosetError("each cover must be a pair")
    return build_poset(covers, n, data.get("labels"), name=data.get("name", ""))


def mobius_table(P: Poset):
    """The Möbius function as an incidence element of constant polynomials."""
    from .incidence import invert, zeta

    return invert(zeta(P))


def is_eulerian(P: Poset) -> bool:
    mu = mobius_table(P)
    for (s, t), val in zip(P.intervals, mu.table):
        expected = 1 if P.rho(s, t) % 2 == 0 else -1
        if val != expected:
            return False
    return True


def _has_unique_minimum(P: Poset, mask: int) -> bool:
    return any(P.up_mask(m) & mask == mask for m in _bits(mask))


def is_lattice(P: Poset) -> bool:
    """True iff every pair has a join and a meet (brute force)."""
    for a in range(P.n):
        for b in range(a + 1, P.n):
            if not _has_unique_minimum(P, P.up_mask(a) & P.up_mask(b)):
                return False
            lower = P.down_mask(a) & P.down_mask(b)
            if not any(P.down_mask(m) & lower == lower for m in _bits(lower)):
                return False
    return True


def dual(P: Poset) -> Poset:
    """Order-reversed poset on the same element ids and labels."""
    name = P.name[:-1] if P.name.endswith("*") else (P.name + "*" if P.name else "")
    return build_poset([(b, a) for a, b in P.covers], P.n, P.labels, name=name)


def direct_product(P: Poset, Q: Poset) -> Poset:
    """Componentwise order; element (p, q) gets id ``p * |Q| + q``."""
    m = Q.n
    covers = []
    for a, b in P.covers:
        for q in range(m):
            covers.append((a * m + q, b * m + q))
    for a, b in Q.covers:
        for p in range(P.n):
            covers.append((p * m + a, p * m + b))
    labels = [f"({P.labels[p]},{Q.labels[q]})" for p in range(P.n) for q in range(m)]
    name = f"{P.name}x{Q.name}" if P.name and Q.name else ""
    return build_poset(covers, P.n * m, labels, name=name)


@dataclass(frozen=True)
class IntervalPoset:
    """The poset of closed intervals of ``base`` plus the empty interval,
    ordered by reverse inclusion."""

    base: Poset
    poset: Poset
    origin: tuple[Interval, ...]

    @cached_property
    def index(self) -> dict[Interval, int]:
        return {iv: i for i, iv in enumerate(self.origin)}

    @property
    def empty(self) -> int:
        return self.index[EMPTY]

    def element(self, s: int, t: int) -> int:
        return self.index[(s, t)]


def interval_poset(P: Poset) -> IntervalPoset:
    top_rank = P.height
    pairs = [(s, t) for s in range(P.n) for t in range(P.n) if P.leq(s, t)]
    # position in the interval poset is rank(s) + (top rank - rank(t))
    pairs.sort(key=lambda st: (P.rank[st[0]] + top_rank - P.rank[st[1]], st[0], st[1]))
    origin: list[Interval] = list(pairs) + [EMPTY]
    idx = {iv: i for i, iv in enumerate(origin)}
    empty = len(origin) - 1

    covers = []
    for s, t in pairs:
        here = idx[(s, t)]
        # shrinking [s,t] by one step moves up in reverse inclusion
        for t2 in P.lower_covers[t]:
            if P.leq(s, t2):
                covers.append((here, idx[(s, t2)]))
        for s2 in P.upper_covers[s]:
            if P.leq(s2, t):
                covers.append((here, idx[(s2, t)]))
        if s == t:
            covers.append((here, empty))

    def label(iv: Interval) -> str:
        if iv is EMPTY:
            return "∅"
        return f"[{P.labels[iv[0]]},{P.labels[iv[1]]}]"

    name = f"Int({P.name})" if P.name else ""
    hat = build_poset(covers, len(origin), [label(iv) for iv in origin], name=name)
    return IntervalPoset(base=P, poset=hat, origin=tuple(origin))


def zeta_poly_values(P: Poset, n_max: int) -> list[int]:
    """``vals[n]`` is the zeta polynomial at n, for ``0 <= n <= n_max``.

    ``vals[n]`` is the [0̂, 1̂] entry of the n-th convolution power of the
    all-ones incidence element, i.e. the number of multichains of n - 1
    elements. Only the 0̂ row of each power is carried.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    row = [0] * P.n
    row[P.bottom] = 1
    vals = [row[P.top]]
    for _ in range(n_max):
        nxt = [0] * P.n
        for y in P.linext:
            nxt[y] = sum(row[x] for x in _bits(P.down_mask(y)))
        row = nxt
        vals.append(row[P.top])
    return vals


def chain_counts(P: Poset) -> list[int]:
    """Entry i counts strict chains of i elements in the proper part of P."""
    proper = [x for x in P.linext if x not in (P.bottom, P.top)]
    if not proper:
        return [1]
    # ending[k][x]: chains with k elements whose largest element is x
    ending = [{x: 1 for x in proper}]
    counts = [1, len(proper)]
    while True:
        prev = ending[-1]
        cur = {}
        for y in proper:
            total = sum(c for x, c in prev.items() if P.lt(x, y))
            if total:
                cur[y] = total
        if not cur:
            break
        ending.append(cur)
        counts.append(sum(cur.values()))
    return counts
