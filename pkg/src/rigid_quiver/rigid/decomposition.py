"""Rigid decomposition by the piecewise-linear multiplicity formula.

For the rigid representation V of dimension vector d and every positive root alpha,

    m(alpha) = [ min{ <e, d>, <d, e'> : 0 != e -> alpha, alpha ->> e' != 0 } ]_+

where e ranges over sub dimension vectors and e' over quotient dimension
vectors of U_alpha. The minimum is taken over the full quantifier set and the
clamp is applied after it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from ..errors import NotARootError
from ..models.schemas import DecompositionCheck, ExtWitness
from ..quiver.core import DimVector, Quiver, as_dim_vector, euler_matrix
from ..roots.system import ext_dim, hom_dim, positive_roots
from .subquot import subquot_sets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiplicityFunction:
    """Sparse map from positive roots to multiplicities (absent = 0).

    Entries are kept sorted by root and never hold zeros.
    """

    quiver: Quiver
    entries: tuple[tuple[DimVector, int], ...]

    @classmethod
    def from_mapping(
        cls, quiver: Quiver, mapping: Mapping[Sequence[int], int]
    ) -> "MultiplicityFunction":
        """Validate roots and multiplicities; zero multiplicities are dropped.

        Raises:
            NotARootError: If a key is not a positive root
            ValueError: If a multiplicity is negative
        """
        system = positive_roots(quiver)
        entries = {}
        for alpha, mult in mapping.items():
            alpha = tuple(int(x) for x in alpha)
            if not system.is_root(alpha):
                raise NotARootError(f"{alpha} is not a positive root of {quiver.descriptor}")
            if mult < 0:
                raise ValueError(f"Multiplicity of {alpha} must be non-negative, got {mult}")
            if mult:
                entries[alpha] = entries.get(alpha, 0) + int(mult)
        return cls(quiver, tuple(sorted(entries.items())))

    def __getitem__(self, alpha: Sequence[int]) -> int:
        return self.as_dict().get(tuple(alpha), 0)

    def __iter__(self) -> Iterator[tuple[DimVector, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[DimVector, int]:
        return dict(self.entries)

    def by_index(self) -> dict[int, int]:
        """The same function keyed by position in the root list."""
        system = positive_roots(self.quiver)
        return {system.index_of(alpha): mult for alpha, mult in self.entries}

    @property
    def support(self) -> list[DimVector]:
        return [alpha for alpha, _ in self.entries]

    def total(self) -> DimVector:
        """sum_alpha m(alpha) * alpha."""
        total = [0] * self.quiver.n
        for alpha, mult in self.entries:
            for k, a in enumerate(alpha):
                total[k] += mult * a
        return tuple(total)


def multiplicity_of(
    quiver: Quiver, alpha: Sequence[int], d: Sequence[int], clamp: bool = True
) -> int:
    """m(alpha) for the rigid representation of dimension d."""
    sets = subquot_sets(quiver, tuple(int(x) for x in alpha))
    d_vec = np.asarray(d, dtype=np.int64)
    euler = euler_matrix(quiver)
    from_subs = sets.subs_array @ euler @ d_vec
    into_quots = d_vec @ euler @ sets.quots_array.T
    value = int(min(from_subs.min(), into_quots.min()))
    return max(value, 0) if clamp else value


def rigid_multiplicities(
    quiver: Quiver, d: Sequence[int], *, clamp: bool = True
) -> MultiplicityFunction:
    """Decomposition of the rigid representation V_{d,ri} into indecomposables.

    Args:
        quiver: Dynkin quiver
        d: Non-negative dimension vector
        clamp: Apply the final [.]_+; only the fault-injection hook turns it off

    Raises:
        DimensionVectorError: If d is negative, too large or of the wrong length
    """
    d = as_dim_vector(d, quiver.n)
    system = positive_roots(quiver)
    entries = []
    for alpha in system:
        mult = multiplicity_of(quiver, alpha, d, clamp=clamp)
        if mult:
            entries.append((alpha, mult))
    result = MultiplicityFunction(quiver, tuple(entries))

    if len(result) > quiver.n:
        logger.warning(f"Support of m for d={d} has {len(result)} roots, more than n={quiver.n}")
    logger.debug(f"Rigid decomposition of {d}: {result.entries}")
    return result


def check_decomposition(
    quiver: Quiver, d: Sequence[int], m: MultiplicityFunction | Mapping[Sequence[int], int]
) -> DecompositionCheck:
    """Check the properties that characterize the rigid decomposition.

    (a) sum m(alpha) alpha = d, (b) Ext^1 vanishes between all support roots
    (ordered pairs, alpha = beta included), (c) at most n support roots.
    Failures are reported with witnesses; nothing is raised for them.
    """
    d = as_dim_vector(d, quiver.n)
    if not isinstance(m, MultiplicityFunction):
        m = MultiplicityFunction.from_mapping(quiver, m)

    total = m.total()
    residual = [a - b for a, b in zip(d, total)]
    witnesses = [
        ExtWitness(source=list(beta), target=list(alpha), ext=ext_dim(quiver, beta, alpha))
        for beta in m.support
        for alpha in m.support
        if ext_dim(quiver, beta, alpha) > 0
    ]
    check = DecompositionCheck(
        sum_ok=not any(residual),
        ext_free=not witnesses,
        support_within_bound=len(m) <= quiver.n,
        support_size=len(m),
        residual=residual,
        ext_witnesses=witnesses,
    )
    if not check.support_within_bound:
        logger.warning(f"Support size {len(m)} exceeds n={quiver.n} for d={d}")
    return check


def generic_hom_from_decomposition(
    quiver: Quiver, alpha: Sequence[int], m: MultiplicityFunction
) -> int:
    """sum_beta m(beta) * dim Hom(U_alpha, U_beta)."""
    return sum(mult * hom_dim(quiver, alpha, beta) for beta, mult in m)
