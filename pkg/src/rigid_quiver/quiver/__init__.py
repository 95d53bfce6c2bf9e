"""Quiver data model, Euler form and Dynkin classification."""

from .core import (
    DimVector,
    Quiver,
    as_dim_vector,
    cartan_pairing,
    euler_form,
    euler_matrix,
)
from .dynkin import DynkinType, classify_dynkin, is_type_a_path
from .parsing import (
    builtin_quiver,
    equioriented_quiver,
    load_quiver,
    parse_quiver,
    single_sink_quiver,
    type_a_orientations,
)

__all__ = [
    "DimVector",
    "DynkinType",
    "Quiver",
    "as_dim_vector",
    "builtin_quiver",
    "cartan_pairing",
    "classify_dynkin",
    "equioriented_quiver",
    "euler_form",
    "euler_matrix",
    "is_type_a_path",
    "load_quiver",
    "parse_quiver",
    "single_sink_quiver",
    "type_a_orientations",
]
