"""Positive roots, hom/ext between indecomposables, and the inverse AR translate.

By Gabriel's theorem the indecomposable representations of a Dynkin quiver
are indexed by the positive roots, the non-negative nonzero vectors alpha with
<alpha, alpha> = 1. Dynkin quivers are representation-directed, which gives
dim Hom(U_beta, U_alpha) = [<beta, alpha>]_+ for roots.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..errors import NotARootError
from ..linalg.field import integer_inverse
from ..quiver.core import DimVector, Quiver, euler_form, euler_matrix, simple_root

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootSystem:
    """All positive roots of a quiver, in lexicographic order."""

    quiver: Quiver
    roots: tuple[DimVector, ...]
    index: dict[DimVector, int] = field(compare=False, repr=False, hash=False)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def is_root(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self.index

    def index_of(self, alpha: Sequence[int]) -> int:
        try:
            return self.index[tuple(alpha)]
        except KeyError:
            raise NotARootError(f"{tuple(alpha)} is not a positive root") from None

    def as_array(self) -> np.ndarray:
        """Roots as rows of an int64 matrix."""
        return np.array(self.roots, dtype=np.int64).reshape(len(self.roots), self.quiver.n)

    @property
    def highest_roots(self) -> list[DimVector]:
        """Componentwise-maximal roots, one per connected component."""
        return [
            alpha
            for alpha in self.roots
            if not any(b != alpha and all(x >= y for x, y in zip(b, alpha)) for b in self.roots)
        ]


def _quadratic_form(points: np.ndarray, euler: np.ndarray) -> np.ndarray:
    """<x, x> for every row x of points."""
    return np.einsum("ij,ij->i", points @ euler, points)


def roots_by_closure(quiver: Quiver) -> list[DimVector]:
    """Grow Phi+ from the simple roots by adding e_i while <., .> stays 1.

    Every positive root of height > 1 is a positive root plus a simple root,
    so the closure is complete.
    """
    n = quiver.n
    simples = [simple_root(n, i) for i in quiver.vertices]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        next_frontier = []
        for alpha in frontier:
            for e in simples:
                beta = tuple(a + b for a, b in zip(alpha, e))
                if beta not in found and euler_form(quiver, beta, beta) == 1:
                    found.add(beta)
                    next_frontier.append(beta)
        frontier = next_frontier
    return sorted(found)


def roots_in_box(quiver: Quiver, bound: Sequence[int]) -> list[DimVector]:
    """All nonzero x with 0 <= x <= bound and <x, x> = 1, by exhaustive scan."""
    axes = [range(b + 1) for b in bound]
    points = np.array(list(itertools.product(*axes)), dtype=np.int64).reshape(-1, quiver.n)
    points = points[points.any(axis=1)]
    mask = _quadratic_form(points, euler_matrix(quiver).astype(np.int64)) == 1
    return sorted(tuple(int(x) for x in row) for row in points[mask])


@lru_cache(maxsize=None)
def positive_roots(quiver: Quiver) -> RootSystem:
    """The complete set Phi+ of positive roots.

    Each connected component is scanned separately inside the box spanned by
    its closure-generated roots; the results are embedded and merged.
    """
    types = quiver.dynkin_types
    roots: list[DimVector] = []
    for comp_type in types:
        vertices = comp_type.vertices
        sub = quiver.restrict(vertices)
        generated = roots_by_closure(sub)
        bound = [max(alpha[k] for alpha in generated) for k in range(sub.n)]
        scanned = roots_in_box(sub, bound)
        if scanned != generated:
            raise RuntimeError(
                f"Root enumerations disagree on component {comp_type.name}: "
                f"{len(scanned)} scanned vs {len(generated)} generated"
            )
        if len(scanned) != comp_type.root_count():
            raise RuntimeError(
                f"{comp_type.name} should have {comp_type.root_count()} roots, "
                f"found {len(scanned)}"
            )
        for alpha in scanned:
            full = [0] * quiver.n
            for k, v in enumerate(vertices):
                full[v - 1] = alpha[k]
            roots.append(tuple(full))

    roots.sort()
    logger.debug(f"Enumerated {len(roots)} positive roots for {quiver.descriptor}")
    return RootSystem(
        quiver=quiver,
        roots=tuple(roots),
        index={alpha: k for k, alpha in enumerate(roots)},
    )


def _require_roots(quiver: Quiver, *vectors: Sequence[int]) -> None:
    system = positive_roots(quiver)
    for v in vectors:
        if not system.is_root(v):
            raise NotARootError(f"{tuple(v)} is not a positive root of {quiver.descriptor}")


def hom_dim(quiver: Quiver, beta: Sequence[int], alpha: Sequence[int]) -> int:
    """dim Hom(U_beta, U_alpha) = [<beta, alpha>]_+ for positive roots."""
    _require_roots(quiver, beta, alpha)
    return max(0, euler_form(quiver, beta, alpha))


def ext_dim(quiver: Quiver, beta: Sequence[int], alpha: Sequence[int]) -> int:
    """dim Ext^1(U_beta, U_alpha) = hom - <beta, alpha> for positive roots."""
    _require_roots(quiver, beta, alpha)
    form = euler_form(quiver, beta, alpha)
    return max(0, form) - form


@dataclass(frozen=True)
class CoxeterMap:
    """The linear map induced by the inverse AR translate on Z^n.

    Satisfies <M d, e> = -<e, d> for all d, e.
    """

    quiver: Quiver
    matrix: np.ndarray = field(compare=False)

    def apply(self, d: Sequence[int]) -> DimVector:
        return tuple(int(x) for x in self.matrix @ np.asarray(d, dtype=np.int64))

    def orbit(self, d: Sequence[int]) -> list[DimVector]:
        """d, M d, M^2 d, ... while the vectors stay non-negative and nonzero."""
        orbit = []
        current = tuple(d)
        while any(current) and all(x >= 0 for x in current):
            orbit.append(current)
            current = self.apply(current)
        return orbit


@lru_cache(maxsize=None)
def coxeter_inverse(quiver: Quiver) -> CoxeterMap:
    """M = -E^{-T} E, the unique matrix with <M d, e> = -<e, d>."""
    euler = euler_matrix(quiver)
    matrix = -(integer_inverse(euler).T @ euler)
    matrix.setflags(write=False)
    return CoxeterMap(quiver=quiver, matrix=matrix)
