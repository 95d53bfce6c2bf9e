"""Brute-force ground truth for the rigid decomposition.

The rigid representation is the unique one with Ext^1(V, V) = 0, so its
decomposition is the unique multiplicity function m with sum m(alpha) alpha = d
whose support is Ext-free. The search walks the roots in lexicographic order
and tries multiplicities from the largest feasible one downward; a root is
skipped whenever it has a nonzero Ext with a root already chosen, so every
leaf reached is an Ext-free decomposition.
"""

from __future__ import annotations

import logging
from typing import Sequence

from ..errors import OracleBoundError, OracleInconsistencyError
from ..quiver.core import DimVector, Quiver, as_dim_vector
from ..roots.system import ext_dim, positive_roots
from .decomposition import MultiplicityFunction

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 14


def brute_force_rigid(
    quiver: Quiver, d: Sequence[int], bound: int = DEFAULT_BOUND
) -> MultiplicityFunction:
    """Exhaustive search for the unique Ext-free decomposition of d.

    Raises:
        OracleBoundError: If sum(d) exceeds bound
        OracleInconsistencyError: If zero or several Ext-free decompositions exist
    """
    d = as_dim_vector(d, quiver.n)
    if sum(d) > bound:
        raise OracleBoundError(f"Total dimension {sum(d)} exceeds the oracle bound {bound}")

    roots = list(positive_roots(quiver))
    count = len(roots)
    ext_free = [
        [ext_dim(quiver, a, b) == 0 and ext_dim(quiver, b, a) == 0 for b in roots] for a in roots
    ]
    # vertices still reachable by roots[idx:]
    coverage = [set() for _ in range(count + 1)]
    for idx in range(count - 1, -1, -1):
        coverage[idx] = coverage[idx + 1] | {k for k, a in enumerate(roots[idx]) if a}

    solutions: list[dict[DimVector, int]] = []
    chosen: list[int] = []
    mults: list[int] = []

    def search(idx: int, remaining: list[int]) -> None:
        if not any(remaining):
            solutions.append({roots[i]: m for i, m in zip(chosen, mults)})
            return
        if idx == count:
            return
        if any(r and k not in coverage[idx] for k, r in enumerate(remaining)):
            return

        alpha = roots[idx]
        compatible = all(ext_free[idx][j] for j in chosen)
        top = min(r // a for r, a in zip(remaining, alpha) if a) if compatible else 0
        for mult in range(top, 0, -1):
            chosen.append(idx)
            mults.append(mult)
            search(idx + 1, [r - mult * a for r, a in zip(remaining, alpha)])
            chosen.pop()
            mults.pop()
        search(idx + 1, remaining)

    search(0, list(d))

    if len(solutions) != 1:
        raise OracleInconsistencyError(
            f"Found {len(solutions)} Ext-free decompositions of {d} on {quiver.descriptor}"
        )
    logger.debug(f"Oracle decomposition of {d}: {solutions[0]}")
    return MultiplicityFunction.from_mapping(quiver, solutions[0])
