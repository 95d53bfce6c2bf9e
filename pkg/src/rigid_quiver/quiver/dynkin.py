"""Dynkin classification of quiver components.

Standard diagrams use Bourbaki labels:

    A_n: 1 - 2 - ... - n
    D_n: 1 - 2 - ... - (n-2) - (n-1), with n attached to n-2
    E_n: 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ..errors import NotDynkinError
from .core import Quiver

logger = logging.getLogger(__name__)

Family = Literal["A", "D", "E"]

# Arm lengths (sorted) around the branch vertex of the exceptional diagrams
_E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}


@dataclass(frozen=True)
class DynkinType:
    """Classification of one connected component.

    Attributes:
        family: "A", "D" or "E"
        rank: Number of vertices of the component
        vertices: Component vertices (quiver labels), ascending
        relabel: Pairs (quiver vertex, standard label), a graph isomorphism onto
            the standard diagram
    """

    family: Family
    rank: int
    vertices: tuple[int, ...]
    relabel: tuple[tuple[int, int], ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def root_count(self) -> int:
        """Number of positive roots of this type."""
        if self.family == "A":
            return self.rank * (self.rank + 1) // 2
        if self.family == "D":
            return self.rank * self.rank - self.rank
        return {6: 36, 7: 63, 8: 120}[self.rank]


def standard_edges(family: Family, rank: int) -> list[tuple[int, int]]:
    """Edges (low label, high label) of the standard diagram."""
    if family == "A":
        if rank < 1:
            raise NotDynkinError(f"A_n needs n >= 1, got {rank}")
        return [(k, k + 1) for k in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise NotDynkinError(f"D_n needs n >= 4, got {rank}")
        return [(k, k + 1) for k in range(1, rank - 1)] + [(rank - 2, rank)]
    if family == "E":
        if rank not in (6, 7, 8):
            raise NotDynkinError(f"E_n needs n in 6..8, got {rank}")
        return [(1, 3)] + [(k, k + 1) for k in range(3, rank)] + [(2, 4)]
    raise NotDynkinError(f"Unknown Dynkin family {family!r}")


def standard_diagram(family: Family, rank: int) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(1, rank + 1))
    g.add_edges_from(standard_edges(family, rank))
    return g


def _family_of(component: nx.Graph) -> tuple[Family, int]:
    n = component.number_of_nodes()
    if not nx.is_tree(component):
        raise NotDynkinError(f"Component {sorted(component.nodes)} contains a cycle")
    degrees = dict(component.degree())
    branch = [v for v, deg in degrees.items() if deg >= 3]
    if not branch:
        return "A", n
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise NotDynkinError(f"Component {sorted(component.nodes)} is not simply-laced Dynkin")

    rest = component.copy()
    rest.remove_node(branch[0])
    arms = tuple(sorted(len(c) for c in nx.connected_components(rest)))
    if arms[0] == 1 and arms[1] == 1:
        return "D", n
    if arms in _E_ARMS:
        return "E", n
    raise NotDynkinError(
        f"Component {sorted(component.nodes)} has arms {arms}; not a Dynkin diagram"
    )


def classify_dynkin(quiver: Quiver) -> list[DynkinType]:
    """Classify every connected component of the underlying graph.

    Returns:
        One DynkinType per component, ordered by smallest vertex

    Raises:
        NotDynkinError: If some component is not of type A, D or E
    """
    graph = quiver.graph()
    types = []
    for vertices in quiver.components():
        component = graph.subgraph(vertices)
        family, rank = _family_of(component)
        matcher = GraphMatcher(component, standard_diagram(family, rank))
        mapping = next(matcher.isomorphisms_iter(), None)
        if mapping is None:
            raise NotDynkinError(f"Component {vertices} does not match {family}{rank}")
        types.append(
            DynkinType(
                family=family,
                rank=rank,
                vertices=vertices,
                relabel=tuple(sorted(mapping.items())),
            )
        )
    logger.debug(f"Classified quiver: {[t.name for t in types]}")
    return types


def is_type_a_path(quiver: Quiver) -> bool:
    """True if the edges are exactly {k, k+1} for k = 1..n-1."""
    edges = {frozenset(a) for a in quiver.arrows}
    return edges == {frozenset((k, k + 1)) for k in range(1, quiver.n)}
