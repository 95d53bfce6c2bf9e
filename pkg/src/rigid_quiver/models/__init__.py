"""Report models for rigid-quiver."""

from .schemas import (
    Checks,
    DecompositionCheck,
    DecompositionReport,
    Discrepancy,
    ExtWitness,
    RankCriterionReport,
    RankEntry,
    RootListing,
    SuiteResult,
    Summand,
    VerificationReport,
)

__all__ = [
    "Checks",
    "DecompositionCheck",
    "DecompositionReport",
    "Discrepancy",
    "ExtWitness",
    "RankCriterionReport",
    "RankEntry",
    "RootListing",
    "SuiteResult",
    "Summand",
    "VerificationReport",
]
