"""Kazhdan–Lusztig–Stanley invariants of Eulerian posets and their interval posets."""

from .generators import generate
from .incidence import IncidenceElement, convolve, delta, invert, is_kernel, rev_element, zeta
from .kls import (
    KlsBundle,
    be_toric,
    be_z,
    chow_function,
    chow_via_zeta_oracle,
    epsilon_bar,
    eulerian_kernel,
    kls_bundle,
    kls_left,
    kls_right,
    toric_h,
    z_function,
)
from .polynomial import IntPolynomial, poly_div_x_minus_1, poly_rev
from .poset import (
    EMPTY,
    IntervalPoset,
    Poset,
    build_poset,
    chain_counts,
    direct_product,
    dual,
    interval_poset,
    is_eulerian,
    is_lattice,
    mobius_table,
    zeta_poly_values,
)
from .isomorphism import is_isomorphic

__version__ = "0.1.0"
