"""Quiver data model and Euler form arithmetic.

Vertices are labeled 1..n; every public argument and result uses 1-based
vertex labels, while dimension vectors are plain tuples whose position k-1
holds the entry at vertex k.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from ..errors import DimensionVectorError, EulerOverflowError, QuiverError

logger = logging.getLogger(__name__)

DimVector = tuple[int, ...]

MAX_ENTRY = 10**6
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Quiver:
    """A finite quiver without loops or multiple edges.

    Attributes:
        n: Number of vertices, labeled 1..n
        arrows: Arrows as (tail, head) pairs, in input order
        label: Builtin descriptor the quiver came from, if any
    """

    n: int
    arrows: tuple[tuple[int, int], ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise QuiverError(f"A quiver needs at least one vertex, got {self.n}")
        seen: set[frozenset[int]] = set()
        for tail, head in self.arrows:
            for v in (tail, head):
                if not 1 <= v <= self.n:
                    raise QuiverError(f"Vertex {v} out of range 1..{self.n}")
            if tail == head:
                raise QuiverError(f"Loop at vertex {tail}")
            edge = frozenset((tail, head))
            if edge in seen:
                raise QuiverError(f"Duplicate arrow between {tail} and {head}")
            seen.add(edge)

    @classmethod
    def from_arrows(
        cls, n: int, arrows: Iterable[Sequence[int]], label: str | None = None
    ) -> "Quiver":
        """Build a quiver from any iterable of (tail, head) pairs."""
        return cls(n, tuple((int(a), int(b)) for a, b in arrows), label)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def descriptor(self) -> str:
        """One-line text that parse_quiver maps back to this quiver."""
        if self.label:
            return self.label
        parts = [f"vertices {self.n}"] + [f"arrow {a} {b}" for a, b in self.arrows]
        return "; ".join(parts)

    def graph(self) -> nx.Graph:
        """Underlying undirected graph."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        comps = [tuple(sorted(c)) for c in nx.connected_components(self.graph())]
        return sorted(comps)

    def reversed(self) -> "Quiver":
        """The opposite quiver (every arrow reversed)."""
        return Quiver(self.n, tuple((b, a) for a, b in self.arrows))

    def restrict(self, vertices: Sequence[int]) -> "Quiver":
        """Full subquiver on the given vertices, relabeled 1..len(vertices) in order."""
        relabel = {v: k for k, v in enumerate(vertices, start=1)}
        arrows = tuple(
            (relabel[a], relabel[b]) for a, b in self.arrows if a in relabel and b in relabel
        )
        return Quiver(len(vertices), arrows)

    @cached_property
    def dynkin_types(self):
        """Classification of every connected component; raises NotDynkinError."""
        from .dynkin import classify_dynkin

        return tuple(classify_dynkin(self))


def check_int64(value: int) -> int:
    """Return value unchanged, or raise if it does not fit a signed 64-bit integer."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise EulerOverflowError(f"Integer {value} overflows 64-bit arithmetic")
    return value


def as_dim_vector(
    values: Iterable[int], n: int, *, nonnegative: bool = True, bound: int | None = MAX_ENTRY
) -> DimVector:
    """Validate and normalize a dimension vector.

    Args:
        values: Entries, one per vertex
        n: Expected length
        nonnegative: Reject negative entries
        bound: Largest absolute entry accepted (None disables the check)

    Raises:
        DimensionVectorError: On any violation
    """
    try:
        vec = tuple(int(v) for v in values)
    except (TypeError, ValueError) as e:
        raise DimensionVectorError(f"Dimension vector entries must be integers: {e}") from e
    if len(vec) != n:
        raise DimensionVectorError(f"Expected {n} entries, got {len(vec)}")
    if nonnegative and any(v < 0 for v in vec):
        raise DimensionVectorError(f"Dimension vector must be non-negative: {vec}")
    if bound is not None and any(abs(v) > bound for v in vec):
        raise DimensionVectorError(f"Entries are bounded by {bound}: {vec}")
    return vec


@lru_cache(maxsize=None)
def euler_matrix(quiver: Quiver) -> np.ndarray:
    """E with E[i][i] = 1 and E[i][j] = -(arrows i -> j), zero-based indices."""
    e = np.eye(quiver.n, dtype=np.int64)
    for tail, head in quiver.arrows:
        e[tail - 1, head - 1] -= 1
    e.setflags(write=False)
    return e


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """The Euler form <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j."""
    if len(d) != quiver.n or len(e) != quiver.n:
        raise DimensionVectorError(
            f"Euler form arguments must have length {quiver.n}, got {len(d)} and {len(e)}"
        )
    total = 0
    for a, b in zip(d, e):
        total = check_int64(total + check_int64(int(a) * int(b)))
    for tail, head in quiver.arrows:
        total = check_int64(total - check_int64(int(d[tail - 1]) * int(e[head - 1])))
    return total


def cartan_pairing(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """Symmetrized form <d, e> + <e, d>; depends only on the underlying graph."""
    return check_int64(euler_form(quiver, d, e) + euler_form(quiver, e, d))


def simple_root(n: int, i: int) -> DimVector:
    """Unit vector at vertex i (1-based)."""
    return tuple(1 if k == i else 0 for k in range(1, n + 1))
