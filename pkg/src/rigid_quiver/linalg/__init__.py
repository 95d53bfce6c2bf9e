"""Exact linear algebra: fields, ranks, representations and hom spaces."""

from .field import FieldConfig, exact_inverse, integer_inverse, matrix_rank
from .representation import (
    Representation,
    format_representation,
    hom_space_dim,
    parse_representation,
    random_rep,
    read_representation,
    rigidity_defect,
    write_representation,
)

__all__ = [
    "FieldConfig",
    "Representation",
    "exact_inverse",
    "format_representation",
    "hom_space_dim",
    "integer_inverse",
    "matrix_rank",
    "parse_representation",
    "random_rep",
    "read_representation",
    "rigidity_defect",
    "write_representation",
]
