"""Dimension vectors of general subrepresentations and quotients of U_alpha.

For a positive root alpha and 0 <= e <= alpha:

    e  is a sub of alpha       iff  [<beta, alpha>]_+ >= <beta, e>  for all roots beta
    e  is a quotient of alpha  iff  [<alpha, beta>]_+ >= <e, beta>  for all roots beta

The zero vector is never included. Results are memoized per (quiver, alpha).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..quiver.core import DimVector, Quiver, as_dim_vector, euler_matrix
from ..roots.system import positive_roots

logger = logging.getLogger(__name__)

_CHUNK = 4096


@dataclass(frozen=True)
class SubQuotSets:
    """Sub and quotient dimension vectors of one indecomposable.

    ``subs_array``/``quots_array`` hold the same vectors as int64 rows, in
    lexicographic order, for vectorized evaluation.
    """

    root: DimVector
    subs: frozenset[DimVector]
    quots: frozenset[DimVector]
    subs_array: np.ndarray = field(compare=False, repr=False)
    quots_array: np.ndarray = field(compare=False, repr=False)


def _box_points(alpha: Sequence[int]) -> np.ndarray:
    """Every nonzero e with 0 <= e <= alpha, lexicographic."""
    axes = [range(a + 1) for a in alpha]
    points = np.array(list(itertools.product(*axes)), dtype=np.int64).reshape(-1, len(alpha))
    return points[points.any(axis=1)]


def _key(alpha: Sequence[int]) -> DimVector:
    return tuple(int(x) for x in alpha)


def _frozen_rows(points: np.ndarray) -> np.ndarray:
    points = np.ascontiguousarray(points)
    points.setflags(write=False)
    return points


@lru_cache(maxsize=None)
def subquot_sets(quiver: Quiver, alpha: DimVector) -> SubQuotSets:
    """Compute (and memoize) both sets for the root alpha.

    Raises:
        NotARootError: If alpha is not a positive root
    """
    system = positive_roots(quiver)
    system.index_of(alpha)

    euler = euler_matrix(quiver)
    roots = system.as_array()
    alpha_vec = np.asarray(alpha, dtype=np.int64)

    # <beta, x> = (roots @ E) x and <x, beta> = x (E @ roots^T), one row/column per root
    left_forms = roots @ euler
    right_forms = euler @ roots.T
    hom_into_alpha = np.maximum(left_forms @ alpha_vec, 0)
    hom_from_alpha = np.maximum(alpha_vec @ right_forms, 0)

    box = _box_points(alpha)
    sub_mask = np.empty(len(box), dtype=bool)
    quot_mask = np.empty(len(box), dtype=bool)
    for start in range(0, len(box), _CHUNK):
        chunk = box[start : start + _CHUNK]
        sub_mask[start : start + _CHUNK] = np.all(
            chunk @ left_forms.T <= hom_into_alpha[None, :], axis=1
        )
        quot_mask[start : start + _CHUNK] = np.all(
            chunk @ right_forms <= hom_from_alpha[None, :], axis=1
        )

    subs = _frozen_rows(box[sub_mask])
    quots = _frozen_rows(box[quot_mask])
    logger.debug(
        f"Root {alpha}: {len(subs)} subs, {len(quots)} quotients out of {len(box)} candidates"
    )
    return SubQuotSets(
        root=alpha,
        subs=frozenset(tuple(int(x) for x in row) for row in subs),
        quots=frozenset(tuple(int(x) for x in row) for row in quots),
        subs_array=subs,
        quots_array=quots,
    )


def sub_dim_vectors(quiver: Quiver, alpha: Sequence[int]) -> frozenset[DimVector]:
    """All nonzero e with e -> alpha a general subrepresentation."""
    return subquot_sets(quiver, _key(alpha)).subs


def quot_dim_vectors(quiver: Quiver, alpha: Sequence[int]) -> frozenset[DimVector]:
    """All nonzero e' with alpha ->> e' a general quotient."""
    return subquot_sets(quiver, _key(alpha)).quots


def hom_root_to(quiver: Quiver, alpha: Sequence[int], d: Sequence[int]) -> int:
    """Generic hom(alpha, d) = max(0, max{<f, d> : alpha ->> f}).

    Equals dim Hom(U_alpha, V) for the rigid representation V of dimension d.

    Raises:
        NotARootError: If alpha is not a positive root
        DimensionVectorError: If d is negative or of the wrong length
    """
    d = as_dim_vector(d, quiver.n)
    sets = subquot_sets(quiver, _key(alpha))
    values = sets.quots_array @ euler_matrix(quiver) @ np.asarray(d, dtype=np.int64)
    return max(0, int(values.max()))
