"""Enumeration of small bounded graded posets and the two search harnesses.

Posets are built level by level: a bottom, inner rank levels, and a top, with
cover relations only between adjacent levels. Every inner element needs a
cover below and above it, which is exactly the condition for the result to be
bounded and graded. Isomorphs are rejected by bucketing on an invariant key
and running an exact isomorphism test inside each bucket.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import product
from typing import Iterator, Optional

from .isomorphism import invariant_key, is_isomorphic
from .kls import TRUNCATIONS, be_toric, be_z, kls_bundle
from .poset import Poset, build_poset, interval_poset, is_eulerian, is_lattice
from .props import gamma_vector

MODES = ("z_vs_hhat", "gamma_scan")
EXHAUSTIVE_LIMIT = 10


@dataclass
class SearchConfig:
    max_elements: int = 8
    max_rank: int = 3
    mode: str = "z_vs_hhat"
    truncation_variant: str = "paper"
    seed: int = 0
    exhaustive: bool = True
    samples: int = 200
    eulerian_only: bool = False
    jobs: int = 1

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.truncation_variant not in TRUNCATIONS:
            raise ValueError(f"truncation variant must be one of {TRUNCATIONS}")
        if self.max_elements < 2:
            raise ValueError("max_elements must be at least 2")
        if self.max_rank < 1:
            raise ValueError("max_rank must be at least 1")
        if self.exhaustive and self.max_elements > EXHAUSTIVE_LIMIT:
            raise ValueError(f"exhaustive search is limited to {EXHAUSTIVE_LIMIT} elements")
        if not self.exhaustive and (self.samples < 1 or self.max_elements < 3 or self.max_rank < 2):
            raise ValueError("sampled mode needs samples >= 1, max_elements >= 3, max_rank >= 2")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _bipartite(a: int, b: int) -> list[tuple[tuple[int, int], ...]]:
    """Relations between a lower level of size a and an upper level of size b
    in which every element has at least one neighbour on the other side."""
    out = []
    lower_choices = [m for m in range(1, 1 << a)]
    for choice in product(lower_choices, repeat=b):
        covered = 0
        for m in choice:
            covered |= m
        if covered != (1 << a) - 1:
            continue
        out.append(tuple((i, j) for j, m in enumerate(choice) for i in range(a) if m >> i & 1))
    return out


def _assemble(levels: tuple[int, ...], relations) -> Poset:
    n = sum(levels) + 2
    starts = []
    nxt = 1
    for size in levels:
        starts.append(nxt)
        nxt += size
    top = n - 1
    covers = []
    if not levels:
        covers.append((0, top))
    else:
        covers += [(0, starts[0] + i) for i in range(levels[0])]
        covers += [(starts[-1] + i, top) for i in range(levels[-1])]
        for k, rel in enumerate(relations):
            covers += [(starts[k] + i, starts[k + 1] + j) for i, j in rel]
    return build_poset(covers, n)


def _candidates(n: int, max_rank: int) -> Iterator[Poset]:
    for rank in range(1, max_rank + 1):
        for levels in _compositions(n - 2, rank - 1):
            rels = [_bipartite(levels[k], levels[k + 1]) for k in range(len(levels) - 1)]
            for combo in product(*rels):
                yield _assemble(levels, combo)


class _IsoFilter:
    def __init__(self):
        self.buckets: dict = {}

    def is_new(self, P: Poset) -> bool:
        key = invariant_key(P)
        reps = self.buckets.setdefault(key, [])
        if any(is_isomorphic(P, Q) for Q in reps):
            return False
        reps.append(P)
        return True


def enumerate_graded_posets(max_elements: int, max_rank: int, min_elements: int = 2) -> Iterator[Poset]:
    """Every bounded graded poset up to isomorphism, in a fixed order (by size, rank, levels)."""
    for n in range(max(min_elements, 2), max_elements + 1):
        seen = _IsoFilter()
        count = 0
        for P in _candidates(n, max_rank):
            if seen.is_new(P):
                yield P.with_name(f"n{n}_{count}")
                count += 1


def sample_graded_posets(max_elements: int, max_rank: int, samples: int, seed: int) -> Iterator[Poset]:
    """Random level structures and random covers; distinct up to isomorphism."""
    rng = random.Random(seed)
    seen = _IsoFilter()
    attempts = 0
    produced = 0
    while produced < samples and attempts < 50 * samples:
        attempts += 1
        n = rng.randint(3, max_elements)
        rank = rng.randint(2, min(max_rank, n - 1))
        cuts = sorted(rng.sample(range(1, n - 2), rank - 2)) if rank > 2 else []
        bounds = [0] + cuts + [n - 2]
        levels = tuple(b - a for a, b in zip(bounds, bounds[1:]))
        rels = []
        for k in range(len(levels) - 1):
            a, b = levels[k], levels[k + 1]
            choice = [rng.randrange(1, 1 << a) for _ in range(b)]
            covered = 0
            for m in choice:
                covered |= m
            for i in range(a):
                if not covered >> i & 1:
                    choice[rng.randrange(b)] |= 1 << i
            rels.append(tuple((i, j) for j, m in enumerate(choice) for i in range(a) if m >> i & 1))
        P = _assemble(levels, rels)
        if seen.is_new(P):
            yield P.with_name(f"sample{produced}")
            produced += 1


def _poly_list(p) -> list[int]:
    return p.to_list()


def z_vs_hhat(P: Poset, truncation: str = "paper") -> Optional[dict]:
    """Compare the Bayer–Ehrenborg Z of P with BE toric h of its interval poset at the top."""
    hat = interval_poset(P)
    z = be_z(P, truncation)[(P.bottom, P.top)]
    _, hh = be_toric(hat.poset, truncation)
    hhat = hh[(hat.element(P.bottom, P.top), hat.empty)]
    if z == hhat:
        return None
    return {
        "poset": P.to_dict(),
        "rank": P.height,
        "eulerian": is_eulerian(P),
        "Z": _poly_list(z),
        "hhat": _poly_list(hhat),
    }


def gamma_check(P: Poset) -> Optional[dict]:
    """A finding iff P is an Eulerian lattice whose Z-polynomial is not gamma-positive."""
    if not (is_lattice(P) and is_eulerian(P)):
        return None
    z = kls_bundle(P).z[(P.bottom, P.top)]
    gamma = gamma_vector(z, P.height)
    if gamma.positive:
        return None
    return {"poset": P.to_dict(), "rank": P.height, "Z": _poly_list(z), "gamma": list(gamma.gamma)}


def _evaluate(args) -> Optional[dict]:
    P, mode, truncation, eulerian_only = args
    if eulerian_only and not is_eulerian(P):
        return None
    if mode == "z_vs_hhat":
        return z_vs_hhat(P, truncation)
    return gamma_check(P)


def candidate_posets(config: SearchConfig) -> Iterator[Poset]:
    if config.exhaustive:
        return enumerate_graded_posets(config.max_elements, config.max_rank)
    return sample_graded_posets(config.max_elements, config.max_rank, config.samples, config.seed)


def run_search(config: SearchConfig, posets=None) -> dict:
    """Run the configured harness; ``posets`` overrides the enumerated candidates."""
    config.validate()
    candidates = list(posets) if posets is not None else list(candidate_posets(config))
    tasks = [(P, config.mode, config.truncation_variant, config.eulerian_only) for P in candidates]
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=16))
    else:
        results = [_evaluate(t) for t in tasks]
    findings = [r for r in results if r is not None]
    return {
        "config": asdict(config),
        "candidates": len(candidates),
        "findings": findings,
        "count": len(findings),
    }
