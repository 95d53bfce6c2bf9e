"""Sink/source data and rank tuples of type A representations.

For an interval i..j, Q^so(i,j) are the sources of the full subquiver on i..j
and Q^si(i,j) the sinks of the subquiver on i-1..j+1 other than i and j. The
projective resolution of U_ij gives the block matrix

    A_ij(V): (+)_{l in Q^so} V_l  -->  (+)_{k in Q^si} V_k

whose row k holds +V_w (the longest path into k from the left) and -V_u (the
longest path into k from the right). Its rank is sum_{l in Q^so} d_l minus
dim Hom(U_ij, V), which is what the rank criterion compares.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from ..errors import RepresentationError
from ..linalg.field import matrix_rank
from ..linalg.representation import Representation
from ..models.schemas import RankCriterionReport, RankEntry
from ..quiver.core import Quiver, as_dim_vector
from ..rigid.subquot import hom_root_to
from .closed_forms import IntervalRoot, intervals
from .construct import require_type_a

logger = logging.getLogger(__name__)

VertexPath = tuple[int, ...]


@dataclass(frozen=True)
class IntervalData:
    """Sinks, sources and the paths w_k, u_k for one interval i..j."""

    i: int
    j: int
    sources: tuple[int, ...]
    interior_sinks: tuple[int, ...]
    boundary_sinks: tuple[int, ...]
    w: dict[int, VertexPath]
    u: dict[int, VertexPath]

    @property
    def sinks(self) -> tuple[int, ...]:
        """Q^si(i,j), ascending."""
        return tuple(sorted(self.interior_sinks + self.boundary_sinks))


@dataclass(frozen=True)
class SinkSourceData:
    quiver: Quiver
    intervals: dict[tuple[int, int], IntervalData]

    def __getitem__(self, key: tuple[int, int]) -> IntervalData:
        return self.intervals[key]

    def __iter__(self) -> Iterator[IntervalData]:
        return iter(self.intervals.values())


@dataclass(frozen=True)
class RankTuple:
    """r(i, j) for all 1 <= i <= j <= n."""

    n: int
    values: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.values[key]

    def items(self):
        return self.values.items()


class _Orientation:
    """Arrow directions along the path 1 - 2 - ... - n."""

    def __init__(self, quiver: Quiver):
        self.arrows = set(quiver.arrows)

    def points(self, a: int, b: int) -> bool:
        return (a, b) in self.arrows

    def is_source(self, x: int, lo: int, hi: int) -> bool:
        """No arrow into x from a neighbour inside lo..hi."""
        return not (
            (x - 1 >= lo and self.points(x - 1, x)) or (x + 1 <= hi and self.points(x + 1, x))
        )

    def is_sink(self, x: int, lo: int, hi: int) -> bool:
        """No arrow out of x to a neighbour inside lo..hi."""
        return not (
            (x - 1 >= lo and self.points(x, x - 1)) or (x + 1 <= hi and self.points(x, x + 1))
        )

    def path_from_left(self, k: int, lo: int) -> Optional[VertexPath]:
        """Longest path ... -> k-1 -> k staying in lo..k, or None if k-1 does not point at k."""
        x = k
        while x - 1 >= lo and self.points(x - 1, x):
            x -= 1
        return tuple(range(x, k + 1)) if x < k else None

    def path_from_right(self, k: int, hi: int) -> Optional[VertexPath]:
        x = k
        while x + 1 <= hi and self.points(x + 1, x):
            x += 1
        return tuple(range(x, k - 1, -1)) if x > k else None


def _interval_data(orient: _Orientation, n: int, i: int, j: int) -> IntervalData:
    sources = tuple(x for x in range(i, j + 1) if orient.is_source(x, i, j))
    interior = tuple(x for x in range(i + 1, j) if orient.is_sink(x, i, j))
    boundary = []
    if i - 1 >= 1 and orient.points(i, i - 1):
        boundary.append(i - 1)
    if j + 1 <= n and orient.points(j, j + 1):
        boundary.append(j + 1)
    w, u = {}, {}
    for k in (*interior, *boundary):
        # paths stay inside i..j apart from their endpoint k
        left = orient.path_from_left(k, i)
        right = orient.path_from_right(k, j)
        if left:
            w[k] = left
        if right:
            u[k] = right
    return IntervalData(i, j, sources, interior, tuple(boundary), w, u)


@lru_cache(maxsize=None)
def sink_source_data(quiver: Quiver) -> SinkSourceData:
    """Q^si, Q^so and the paths w, u for every interval of a type A quiver.

    Raises:
        NotTypeAError: If the quiver is not an orientation of the path 1-2-...-n
    """
    require_type_a(quiver)
    orient = _Orientation(quiver)
    data = {}
    for root in intervals(quiver.n):
        entry = _interval_data(orient, quiver.n, root.i, root.j)
        if len(entry.sources) != len(entry.interior_sinks) + 1:
            raise RuntimeError(f"Source/sink count broken on ({root.i}, {root.j})")
        data[(root.i, root.j)] = entry
    return SinkSourceData(quiver, data)


def _block_rank(
    v: Representation,
    rows: Sequence[tuple[int, Optional[VertexPath], Optional[VertexPath]]],
    columns: Sequence[int],
) -> int:
    """Rank of the block matrix with row k holding +V_left and -V_right."""
    if not rows or not columns:
        return 0
    col_offset, width = {}, 0
    for source in columns:
        col_offset[source] = width
        width += v.dims[source - 1]
    height = sum(v.dims[k - 1] for k, _, _ in rows)
    if height == 0 or width == 0:
        return 0

    matrix = np.zeros((height, width), dtype=object)
    top = 0
    for k, left, right in rows:
        size = v.dims[k - 1]
        for path, sign in ((left, 1), (right, -1)):
            if path is None:
                continue
            block = v.path_map(path)
            start = col_offset[path[0]]
            matrix[top : top + size, start : start + block.shape[1]] += sign * block
        top += size
    return matrix_rank(matrix, v.field)


def rank_tuple_of(v: Representation) -> RankTuple:
    """rank A_ij(V) for every i <= j, i = j included."""
    data = sink_source_data(v.quiver)
    values = {}
    for entry in data:
        rows = [(k, entry.w.get(k), entry.u.get(k)) for k in entry.sinks]
        values[(entry.i, entry.j)] = _block_rank(v, rows, entry.sources)
    return RankTuple(v.quiver.n, values)


def composite_rank_tuple(v: Representation) -> RankTuple:
    """Rank of the map from the sources of Q(i,j) to its sinks, endpoints included.

    r(i,i) = d_i. On 1 -> ... -> n this is the rank of V_j...V_i; on a
    single-sink quiver with i < s < j it is the rank of V_i (+) V_j -> V_s.
    """
    data = sink_source_data(v.quiver)
    orient = _Orientation(v.quiver)
    values = {}
    for entry in data:
        i, j = entry.i, entry.j
        if i == j:
            values[(i, j)] = v.dims[i - 1]
            continue
        sinks = [x for x in range(i, j + 1) if orient.is_sink(x, i, j)]
        rows = [(k, orient.path_from_left(k, i), orient.path_from_right(k, j)) for k in sinks]
        values[(i, j)] = _block_rank(v, rows, entry.sources)
    return RankTuple(v.quiver.n, values)


def rank_targets(quiver: Quiver, d: Sequence[int]) -> RankTuple:
    """sum_{l in Q^so(i,j)} d_l - hom(alpha_ij, d), the ranks of the rigid representation."""
    d = as_dim_vector(d, quiver.n)
    data = sink_source_data(quiver)
    values = {}
    for entry in data:
        alpha = IntervalRoot(entry.i, entry.j).vector(quiver.n)
        from_sources = sum(d[l - 1] for l in entry.sources)
        values[(entry.i, entry.j)] = from_sources - hom_root_to(quiver, alpha, d)
    return RankTuple(quiver.n, values)


def verify_rank_criterion(
    quiver: Quiver, v: Representation, d: Optional[Sequence[int]] = None
) -> RankCriterionReport:
    """Compare rank A_ij(V) with the rigid target on every interval.

    V is isomorphic to the rigid representation of dimension d exactly when
    the report passes. Failures are reported, never raised.

    Raises:
        RepresentationError: If V lives on another quiver or has dimension != d
    """
    if v.quiver != quiver:
        raise RepresentationError("Representation lives on a different quiver")
    d = v.dims if d is None else as_dim_vector(d, quiver.n)
    if tuple(d) != v.dims:
        raise RepresentationError(f"Representation has dimension {list(v.dims)}, expected {d}")

    ranks = rank_tuple_of(v)
    targets = rank_targets(quiver, d)
    entries = [
        RankEntry(i=i, j=j, rank=ranks[(i, j)], target=targets[(i, j)])
        for (i, j) in sorted(targets.values)
    ]
    report = RankCriterionReport(
        quiver=quiver.descriptor, d=list(d), field=v.field.name, entries=entries
    )
    for failure in report.failures:
        logger.info(
            f"Rank criterion fails at ({failure.i},{failure.j}): "
            f"rank {failure.rank}, target {failure.target}"
        )
    return report


def degenerate_rep(v: Representation) -> Optional[tuple[int, Representation]]:
    """Zero the first arrow map of positive rank.

    Returns:
        (0-based arrow index, degenerated representation), or None when every
        map is already zero
    """
    for k, matrix in enumerate(v.maps):
        if matrix.size and matrix_rank(matrix, v.field) > 0:
            return k, v.zeroed(k)
    return None
