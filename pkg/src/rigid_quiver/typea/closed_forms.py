"""Interval roots and the closed-form multiplicities on type A quivers.

On A_n the positive roots are the intervals alpha_ij (1 <= i <= j <= n). On the
equioriented quiver 1 -> 2 -> ... -> n

    m(alpha_ij) = [min{d_k - d_{i-1}, d_k - d_{j+1} : i <= k <= j}]_+

with d_0 = d_{n+1} = 0. The single-sink quiver 1 -> ... -> s <- ... <- n has
a four-branch formula; ``single_sink_multiplicities`` evaluates it
verbatim or replaces it by the general formula restricted to intervals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from ..errors import DimensionVectorError
from ..models.schemas import Discrepancy
from ..quiver.core import DimVector, Quiver, as_dim_vector
from ..quiver.parsing import equioriented_quiver, single_sink_quiver
from ..rigid.decomposition import MultiplicityFunction, multiplicity_of

logger = logging.getLogger(__name__)

SingleSinkMode = Literal["verbatim", "corrected"]
BOUNDARY_BRANCHES = ("j=s", "i=s")


@dataclass(frozen=True, order=True)
class IntervalRoot:
    """The root alpha_ij with entries 1 exactly on i..j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.i <= self.j:
            raise ValueError(f"Interval needs 1 <= i <= j, got ({self.i}, {self.j})")

    def vector(self, n: int) -> DimVector:
        if self.j > n:
            raise ValueError(f"Interval ({self.i}, {self.j}) exceeds n={n}")
        return tuple(1 if self.i <= k <= self.j else 0 for k in range(1, n + 1))

    @classmethod
    def from_vector(cls, alpha: Sequence[int]) -> "IntervalRoot":
        """Inverse of vector(); raises ValueError if alpha is not an interval."""
        support = [k for k, a in enumerate(alpha, start=1) if a]
        if not support or any(alpha[k - 1] != 1 for k in support) or (
            support[-1] - support[0] + 1 != len(support)
        ):
            raise ValueError(f"{tuple(alpha)} is not an interval root")
        return cls(support[0], support[-1])

    def __str__(self) -> str:
        return f"alpha_{self.i},{self.j}"


def intervals(n: int) -> Iterator[IntervalRoot]:
    """All alpha_ij with 1 <= i <= j <= n, ordered by (i, j)."""
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield IntervalRoot(i, j)


def closed_subsets(
    quiver: Quiver, root: IntervalRoot, direction: Literal["successors", "predecessors"]
) -> set[DimVector]:
    """Indicator vectors of the nonempty I in i..j closed under successors (or predecessors).

    These are exactly the sub (successors) and quotient (predecessors)
    dimension vectors of U_ij.
    """
    span = range(root.i, root.j + 1)
    inner = [(a, b) for a, b in quiver.arrows if a in span and b in span]
    if direction == "predecessors":
        inner = [(b, a) for a, b in inner]
    found = set()
    vertices = list(span)
    for mask in range(1, 1 << len(vertices)):
        chosen = {v for k, v in enumerate(vertices) if mask >> k & 1}
        if all(b in chosen for a, b in inner if a in chosen):
            found.add(tuple(1 if k in chosen else 0 for k in range(1, quiver.n + 1)))
    return found


def _padded(d: Sequence[int]) -> list[int]:
    """d with d_0 = d_{n+1} = 0 so that padded[k] is d_k for k in 0..n+1."""
    return [0, *d, 0]


def equioriented_multiplicities(n: int, d: Sequence[int]) -> MultiplicityFunction:
    """Closed form for 1 -> 2 -> ... -> n."""
    d = as_dim_vector(d, n)
    p = _padded(d)
    entries = {}
    for root in intervals(n):
        i, j = root.i, root.j
        value = min(min(p[k] - p[i - 1], p[k] - p[j + 1]) for k in range(i, j + 1))
        if value > 0:
            entries[root.vector(n)] = value
    return MultiplicityFunction.from_mapping(equioriented_quiver(n), entries)


def single_sink_branch(n: int, s: int, d: Sequence[int], root: IntervalRoot) -> tuple[str, int]:
    """Evaluate the literal single-sink branch that applies to alpha_ij.

    Branches are tried in their listed order, so i = j = s falls in "j=s".

    Returns:
        (branch name, clamped value)
    """
    p = _padded(d)
    i, j = root.i, root.j
    if i < s < j:
        terms = [p[s] - p[i - 1] - p[j + 1]]
        for k in range(i, s + 1):
            for k2 in range(s, j + 1):
                terms += [p[k] + p[k2] - p[s], p[k2] - p[j + 1], p[k] - p[i - 1]]
        branch = "i<s<j"
    elif j < s or i > s:
        terms = [min(p[k] - p[j + 1], p[k] - p[i - 1]) for k in range(i, j + 1)]
        branch = "j<s or i>s"
    elif j == s:
        terms = [p[k] - p[i - 1] for k in range(i, j + 1)]
        branch = "j=s"
    else:
        terms = [p[k] - p[j + 1] for k in range(i, j + 1)]
        branch = "i=s"
    return branch, max(0, min(terms))


def single_sink_multiplicities(
    n: int, s: int, d: Sequence[int], mode: SingleSinkMode = "corrected"
) -> MultiplicityFunction:
    """Multiplicities on 1 -> ... -> s <- ... <- n.

    Args:
        mode: "verbatim" evaluates the literal branches; "corrected"
            evaluates the general formula on every interval root
    """
    d = as_dim_vector(d, n)
    quiver = single_sink_quiver(n, s)
    entries = {}
    for root in intervals(n):
        if mode == "verbatim":
            _, value = single_sink_branch(n, s, d, root)
        elif mode == "corrected":
            value = multiplicity_of(quiver, root.vector(n), d)
        else:
            raise ValueError(f"Unknown single-sink mode {mode!r}")
        if value:
            entries[root.vector(n)] = value
    return MultiplicityFunction.from_mapping(quiver, entries)


def single_sink_discrepancies(n: int, s: int, d: Sequence[int]) -> list[Discrepancy]:
    """Every interval where the literal branches disagree with the general formula."""
    d = as_dim_vector(d, n)
    if not 1 <= s <= n:
        raise DimensionVectorError(f"Sink {s} out of range 1..{n}")
    quiver = single_sink_quiver(n, s)
    found = []
    for root in intervals(n):
        branch, verbatim = single_sink_branch(n, s, d, root)
        corrected = multiplicity_of(quiver, root.vector(n), d)
        if verbatim != corrected:
            record = Discrepancy(
                n=n,
                s=s,
                d=list(d),
                i=root.i,
                j=root.j,
                branch=branch,
                verbatim=verbatim,
                corrected=corrected,
                boundary=branch in BOUNDARY_BRANCHES,
            )
            logger.info(
                f"Single-sink mismatch s={s} n={n} d={list(d)} (i,j)=({root.i},{root.j}): "
                f"branch {branch} gives {verbatim}, general formula {corrected}"
            )
            found.append(record)
    return found
