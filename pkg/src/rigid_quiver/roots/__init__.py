"""Positive roots, hom/ext between indecomposables, and the Coxeter map."""

from .system import (
    CoxeterMap,
    RootSystem,
    coxeter_inverse,
    ext_dim,
    hom_dim,
    positive_roots,
    roots_by_closure,
    roots_in_box,
)

__all__ = [
    "CoxeterMap",
    "RootSystem",
    "coxeter_inverse",
    "ext_dim",
    "hom_dim",
    "positive_roots",
    "roots_by_closure",
    "roots_in_box",
]
