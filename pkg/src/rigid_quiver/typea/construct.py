"""Explicit interval representations on type A quivers."""

from __future__ import annotations

import logging
from typing import Mapping, Sequence

import numpy as np

from ..errors import NotTypeAError
from ..linalg.field import FieldConfig
from ..linalg.representation import Representation
from ..quiver.core import Quiver
from ..quiver.dynkin import is_type_a_path
from ..rigid.decomposition import MultiplicityFunction
from .closed_forms import IntervalRoot

logger = logging.getLogger(__name__)


def require_type_a(quiver: Quiver) -> None:
    """Raise NotTypeAError unless the edges are {k, k+1} for k = 1..n-1."""
    if not is_type_a_path(quiver):
        raise NotTypeAError(
            f"{quiver.descriptor} is not an orientation of A_{quiver.n} on the path 1-2-...-n"
        )


def build_rigid_rep(
    quiver: Quiver,
    m: MultiplicityFunction | Mapping[Sequence[int], int],
    field: FieldConfig,
) -> Representation:
    """Direct sum of m(alpha_ij) copies of U_ij with identity maps inside each interval.

    Summands are laid out in root order, so the basis of V_k lists the copies
    whose interval contains k in that order.

    Raises:
        NotTypeAError: If the quiver is not a type A path
        ValueError: If a key of m is not an interval root
    """
    require_type_a(quiver)
    if not isinstance(m, MultiplicityFunction):
        m = MultiplicityFunction.from_mapping(quiver, m)

    copies: list[IntervalRoot] = []
    for alpha, mult in m:
        copies.extend([IntervalRoot.from_vector(alpha)] * mult)

    # position of each copy in the basis of every vertex it touches
    position: list[dict[int, int]] = [{} for _ in range(quiver.n + 1)]
    dims = [0] * quiver.n
    for c, root in enumerate(copies):
        for k in range(root.i, root.j + 1):
            position[k][c] = dims[k - 1]
            dims[k - 1] += 1

    maps = []
    for tail, head in quiver.arrows:
        matrix = np.zeros((dims[head - 1], dims[tail - 1]), dtype=object)
        for c, col in position[tail].items():
            if c in position[head]:
                matrix[position[head][c], col] = 1
        maps.append(matrix)
    rep = Representation(quiver, tuple(dims), tuple(maps), field)
    logger.debug(f"Built interval module of dimension {rep.dims} from {len(copies)} summands")
    return rep


def interval_rep(quiver: Quiver, i: int, j: int, field: FieldConfig) -> Representation:
    """The indecomposable U_ij."""
    return build_rigid_rep(quiver, {IntervalRoot(i, j).vector(quiver.n): 1}, field)
