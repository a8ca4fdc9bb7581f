"""Symmetric Calabi-Yau threefold hypersurfaces in weighted projective 4-space.

Exact Jacobian-ring series arithmetic for Hodge numbers, equivariant
splittings under the cyclic action on s, and the bounded searches that
enumerate all types of the form s^m + H(x0, x1, x2) - x3^2.
"""
from __future__ import annotations

from importlib import metadata

from .arith import divisors, euler_phi, gcd
from .enumerate import (
    DENOMINATOR_BOUND,
    classify_fermat,
    egyptian_counts,
    egyptian_five,
    search_case1,
    search_case2,
    verify_row,
)
from .equivariant import (
    cross_check_h12,
    eigenspace_table,
    isotypical_decomposition,
    parse_rep_string,
    quotient_hodge,
)
from .hodge import HodgeVector, genus, hodge_numbers_cy3, jacobian_dim, kuranishi_dim, milnor_series
from .wtypes import (
    InvalidTypeError,
    QSStatus,
    SymmetricCYType,
    WeightedType,
    amplitude,
    make_symmetric_cy,
    quasi_smooth_general,
    quotient_type,
    well_formed_type,
)

try:
    __version__ = metadata.version("artifact")
except metadata.PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"

__all__ = [
    "DENOMINATOR_BOUND", "HodgeVector", "InvalidTypeError", "QSStatus", "SymmetricCYType",
    "WeightedType", "amplitude", "classify_fermat", "cross_check_h12", "divisors",
    "egyptian_counts", "egyptian_five", "eigenspace_table", "euler_phi", "gcd", "genus",
    "hodge_numbers_cy3", "isotypical_decomposition", "jacobian_dim", "kuranishi_dim",
    "make_symmetric_cy", "milnor_series", "parse_rep_string", "quasi_smooth_general",
    "quotient_hodge", "quotient_type", "search_case1", "search_case2", "verify_row",
    "well_formed_type",
]
