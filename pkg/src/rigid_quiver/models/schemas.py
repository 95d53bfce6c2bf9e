"""Pydantic report models for rigid-quiver.

Every command output is one of these models; JSON output is
``model_dump_json`` and re-parsing with ``model_validate_json`` yields an
equal model.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field


class ExtWitness(BaseModel):
    """A pair of support roots with a nonzero Ext^1."""

    source: list[int] = Field(..., description="Root beta of Ext^1(U_beta, U_alpha)")
    target: list[int] = Field(..., description="Root alpha of Ext^1(U_beta, U_alpha)")
    ext: int = Field(..., ge=1, description="dim Ext^1(U_beta, U_alpha)")


class DecompositionCheck(BaseModel):
    """Outcome of checking a multiplicity function against a dimension vector."""

    sum_ok: bool = Field(..., description="sum m(alpha) alpha equals d")
    ext_free: bool = Field(..., description="Ext^1 vanishes on all ordered support pairs")
    support_within_bound: bool = Field(..., description="At most n support roots")
    support_size: int = Field(..., ge=0)
    residual: list[int] = Field(default_factory=list, description="d - sum m(alpha) alpha")
    ext_witnesses: list[ExtWitness] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """(a) and (b) hold; (c) is informational."""
        return self.sum_ok and self.ext_free


class Summand(BaseModel):
    """One indecomposable summand U_root with its multiplicity."""

    root: list[int]
    mult: int = Field(..., ge=0)


class Checks(BaseModel):
    """The checks block of a decomposition report."""

    sum: bool
    ext_free: bool


class Discrepancy(BaseModel):
    """A disagreement between the literal single-sink branches and the general formula."""

    n: int
    s: int = Field(..., description="Position of the unique sink")
    d: list[int]
    i: int
    j: int
    branch: str = Field(..., description="Literal branch that applied")
    verbatim: int
    corrected: int
    boundary: bool = Field(..., description="The branch is one of the i=s / j=s cases")


class DecompositionReport(BaseModel):
    """Output of the decompose command."""

    command: str = Field(default="decompose")
    quiver: str = Field(..., description="Quiver descriptor accepted by parse_quiver")
    d: list[int]
    mode: Literal["verbatim", "corrected"] = Field(
        default="corrected", description="How single-sink summands were evaluated"
    )
    summands: list[Summand] = Field(default_factory=list)
    checks: Checks
    support_within_bound: bool = True
    ext_witnesses: list[ExtWitness] = Field(default_factory=list)
    discrepancies: list[Discrepancy] = Field(default_factory=list)
    elapsed_seconds: Optional[float] = Field(None, description="Wall time; ignored in comparisons")

    def content_key(self) -> dict:
        """Fields that must agree between two evaluations of the same input."""
        return self.model_dump(exclude={"elapsed_seconds", "command"})


class RootListing(BaseModel):
    """Output of the roots command."""

    command: str = Field(default="roots")
    quiver: str
    types: list[str]
    count: int
    roots: list[list[int]]


class RankEntry(BaseModel):
    """Rank of A_ij(V) against the rigid target for one interval."""

    i: int
    j: int
    rank: int
    target: int

    @property
    def ok(self) -> bool:
        return self.rank == self.target


class RankCriterionReport(BaseModel):
    """Per-interval comparison of a representation with the rigid rank tuple."""

    command: str = Field(default="typea check")
    quiver: str
    d: list[int]
    field: str
    entries: list[RankEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.ok for entry in self.entries)

    @property
    def failures(self) -> list[RankEntry]:
        return [entry for entry in self.entries if not entry.ok]


class SuiteResult(BaseModel):
    """Outcome of one verification suite."""

    name: str
    cases: int = 0
    failures: int = 0
    witnesses: list[str] = Field(default_factory=list, description="First failing cases")
    notes: list[str] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0


class VerificationReport(BaseModel):
    """Output of the verify command."""

    command: str = Field(default="verify")
    seed: int
    max_total_dim: int
    samples: int
    fault_injected: bool = False
    suites: list[SuiteResult] = Field(default_factory=list)
    discrepancies: list[Discrepancy] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)
