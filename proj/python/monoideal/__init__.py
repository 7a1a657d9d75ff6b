"""Socles and generators of monomial ideals via the dominance order on Z^d.

Points are tuples of ints; point sets are lists of such tuples, returned
in lexicographic order.
"""

from ._monoideal import (
    ArithmeticOverflow,
    DimensionMismatch,
    MonoidealError,
    NotAnAntichain,
    NotCofinite,
    PreconditionError,
    augment_down,
    augment_up,
    classify_type,
    is_antichain,
    is_order_generic,
    leq,
    maximal_elements,
    minimal_elements,
    ordered_bell,
    retrieve_generators,
    socle_down,
    socle_to_generators,
    socle_up,
    type2_generators,
    type3_generators,
    zero_dim_ideal_from_socle,
)

__all__ = [
    "ArithmeticOverflow",
    "DimensionMismatch",
    "MonoidealError",
    "NotAnAntichain",
    "NotCofinite",
    "PreconditionError",
    "augment_down",
    "augment_up",
    "classify_type",
    "is_antichain",
    "is_order_generic",
    "leq",
    "maximal_elements",
    "minimal_elements",
    "ordered_bell",
    "retrieve_generators",
    "socle_down",
    "socle_to_generators",
    "socle_up",
    "type2_generators",
    "type3_generators",
    "zero_dim_ideal_from_socle",
]
