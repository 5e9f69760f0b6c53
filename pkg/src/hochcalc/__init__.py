"""Exact chain-level calculus on Hochschild and cyclic complexes."""

from .algebra import (
    CORPUS,
    FAMILIES,
    GradedAlgebra,
    algebra_from_json,
    algebra_to_json,
    dual_numbers,
    family_cubic_st,
    family_velocity,
    family_x3_tx,
    family_xx_t,
    group_z2,
    matrix2,
    rationals,
    truncated_poly3,
    upper_triangular2,
    validate_algebra,
)
from .chains import Chain, USeries, boundary_b, chain_internal_delta, connes_B, cyclic_differential, cyclic_shuffle, shuffle
from .cochains import Cochain, MulCochain, brace, bracket, check_etoee, circle, cup, hochschild_delta, lift
from .scalars import Poly, koszul_sign, rat, rat_str

__version__ = "0.1.0"
