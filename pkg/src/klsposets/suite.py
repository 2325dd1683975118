"""Built-in corpus of posets used by the CLI ``--suite`` flag and the tests."""

from __future__ import annotations

from .generators import boolean, chain, cross_polytope_faces, cube_faces, paper_fig1, paper_fig2
from .poset import Poset, direct_product


def eulerian_suite() -> list[Poset]:
    diamond = boolean(2)
    posets = [chain(1), diamond]
    posets += [boolean(n) for n in (1, 3, 4)]
    posets += [cube_faces(d) for d in (1, 2, 3)]
    posets += [cross_polytope_faces(d) for d in (1, 2, 3)]
    posets += [paper_fig1(), paper_fig2(), direct_product(diamond, diamond)]
    return posets


def non_eulerian_suite() -> list[Poset]:
    """Small graded posets that are not Eulerian (chains, a 3-atom rank-2 poset)."""
    from .poset import build_poset

    three_atoms = build_poset([(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], 5,
                              ["0̂", "a", "b", "c", "1̂"], name="M3")
    return [chain(2), chain(3), chain(4), three_atoms]


def gamma_scan_suite() -> list[Poset]:
    """Polytopal Eulerian lattices: B_n (n <= 4), cube and cross-polytope face lattices (dim <= 3)."""
    posets = [boolean(n) for n in range(1, 5)]
    posets += [cube_faces(d) for d in (1, 2, 3)]
    posets += [cross_polytope_faces(d) for d in (1, 2, 3)]
    return posets
