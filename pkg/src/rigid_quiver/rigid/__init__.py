"""Rigid decomposition, its checks, and the brute-force oracle."""

from .decomposition import (
    MultiplicityFunction,
    check_decomposition,
    generic_hom_from_decomposition,
    rigid_multiplicities,
)
from .oracle import brute_force_rigid
from .subquot import SubQuotSets, hom_root_to, quot_dim_vectors, sub_dim_vectors, subquot_sets

__all__ = [
    "MultiplicityFunction",
    "SubQuotSets",
    "brute_force_rigid",
    "check_decomposition",
    "generic_hom_from_decomposition",
    "hom_root_to",
    "quot_dim_vectors",
    "rigid_multiplicities",
    "sub_dim_vectors",
    "subquot_sets",
]
