"""Batch verification suites.

Each suite takes a ``SuiteContext`` and returns a ``SuiteResult`` holding case
and failure counts plus the first few failing cases. Randomness comes from a
generator seeded by (seed, suite number), so a suite's cases do not depend on
which other suites ran.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from ..linalg.field import FieldConfig
from ..linalg.representation import hom_space_dim, random_rep, rigidity_defect
from ..models.schemas import Discrepancy, SuiteResult
from ..quiver.core import DimVector, Quiver, euler_form, simple_root
from ..quiver.parsing import (
    builtin_quiver,
    equioriented_quiver,
    single_sink_quiver,
    type_a_orientations,
)
from ..rigid.decomposition import MultiplicityFunction, check_decomposition, rigid_multiplicities
from ..rigid.oracle import DEFAULT_BOUND, brute_force_rigid
from ..rigid.subquot import hom_root_to
from ..roots.system import coxeter_inverse, positive_roots, roots_by_closure, roots_in_box
from ..typea.closed_forms import (
    BOUNDARY_BRANCHES,
    equioriented_multiplicities,
    single_sink_discrepancies,
    single_sink_multiplicities,
)
from ..typea.construct import build_rigid_rep, interval_rep
from ..typea.ranks import degenerate_rep, verify_rank_criterion

logger = logging.getLogger(__name__)

MAX_WITNESSES = 5
SEMICONTINUITY_EQUALITY_RATE = 0.95
# (n, s, d, i, j) instances every single-sink run must reproduce
SINGLE_SINK_WITNESSES = ((3, 2, (1, 2, 1), 2, 2), (3, 2, (1, 1, 1), 1, 2))


@dataclass
class SuiteContext:
    """Parameters shared by all suites of one run."""

    seed: int
    max_total_dim: int = 6
    samples: int = 200
    random_cases: int = 100
    closed_form_cases: int = 500
    single_sink_cases: int = 200
    structural_cases: int = 100
    max_rank: int = 8
    prime: int = 32003
    oracle_bound: int = DEFAULT_BOUND
    inject_fault: bool = False
    discrepancies: list[Discrepancy] = field(default_factory=list)

    def rng(self, suite: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, suite])

    def decompose(self, quiver: Quiver, d: Sequence[int]) -> MultiplicityFunction:
        """rigid_multiplicities, without the final clamp when a fault is injected."""
        return rigid_multiplicities(quiver, d, clamp=not self.inject_fault)

    @property
    def field(self) -> FieldConfig:
        return FieldConfig.prime(self.prime)


class _Tally:
    """Collects cases and witnesses for one suite."""

    def __init__(self, name: str):
        self.result = SuiteResult(name=name)
        self.started = time.perf_counter()

    def check(self, ok: bool, witness: Callable[[], str]) -> bool:
        self.result.cases += 1
        if not ok:
            self.result.failures += 1
            if len(self.result.witnesses) < MAX_WITNESSES:
                self.result.witnesses.append(witness())
        return ok

    def note(self, text: str) -> None:
        self.result.notes.append(text)

    def done(self) -> SuiteResult:
        self.result.elapsed_seconds = round(time.perf_counter() - self.started, 3)
        logger.info(
            f"Suite {self.result.name}: {self.result.cases} cases, "
            f"{self.result.failures} failures"
        )
        return self.result


# =============================================================================
# Batteries
# =============================================================================


def dims_up_to(n: int, total: int) -> Iterator[DimVector]:
    """Every non-negative d of length n with sum(d) <= total."""
    if n == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in dims_up_to(n - 1, total - first):
            yield (first, *rest)


def oracle_battery() -> list[Quiver]:
    """All orientations of A2..A4, D4 in two orientations, D5 and E6 in one."""
    quivers = [q for n in (2, 3, 4) for q in type_a_orientations(n)]
    d4 = builtin_quiver("D", 4)
    quivers += [d4, d4.reversed(), builtin_quiver("D", 5), builtin_quiver("E", 6)]
    return quivers


def standard_battery(max_rank: int) -> list[Quiver]:
    """A_n, D_n, E_n for all ranks up to max_rank, default orientation."""
    quivers = [builtin_quiver("A", n) for n in range(1, max_rank + 1)]
    quivers += [builtin_quiver("D", n) for n in range(4, max_rank + 1)]
    quivers += [builtin_quiver("E", n) for n in range(6, min(max_rank, 8) + 1)]
    return quivers


def structural_battery(max_rank: int) -> list[Quiver]:
    """The largest A and D plus every E up to max_rank, each in two orientations."""
    bases = [builtin_quiver("A", max_rank)]
    if max_rank >= 4:
        bases.append(builtin_quiver("D", max_rank))
    bases += [builtin_quiver("E", n) for n in range(6, min(max_rank, 8) + 1)]
    return [q for base in bases for q in (base, base.reversed())]


def _random_orientation(rng: np.random.Generator, n: int) -> Quiver:
    if n == 1:
        return builtin_quiver("A", 1)
    return builtin_quiver("A", n, "".join(rng.choice([">", "<"], size=n - 1)))


def _random_d(rng: np.random.Generator, n: int, high: int) -> DimVector:
    return tuple(int(x) for x in rng.integers(0, high + 1, size=n))


def _show(m: MultiplicityFunction) -> str:
    return str({alpha: mult for alpha, mult in m})


# =============================================================================
# Suites
# =============================================================================


def run_roots(ctx: SuiteContext) -> SuiteResult:
    """Root counts and agreement of the two enumerations."""
    tally = _Tally("roots")
    for quiver in standard_battery(ctx.max_rank):
        (comp_type,) = quiver.dynkin_types
        generated = roots_by_closure(quiver)
        bound = [max(alpha[k] for alpha in generated) for k in range(quiver.n)]
        scanned = roots_in_box(quiver, bound)
        tally.check(
            scanned == generated and len(generated) == comp_type.root_count(),
            lambda: f"{comp_type.name}: closure {len(generated)}, box {len(scanned)}, "
            f"expected {comp_type.root_count()}",
        )
    return tally.done()


def run_coxeter(ctx: SuiteContext) -> SuiteResult:
    """<M e_i, e_j> = -<e_j, e_i> on every battery quiver."""
    tally = _Tally("coxeter")
    for quiver in oracle_battery() + structural_battery(ctx.max_rank):
        cox = coxeter_inverse(quiver)
        bad = [
            (i, j)
            for i in quiver.vertices
            for j in quiver.vertices
            if euler_form(quiver, cox.apply(simple_root(quiver.n, i)), simple_root(quiver.n, j))
            != -euler_form(quiver, simple_root(quiver.n, j), simple_root(quiver.n, i))
        ]
        tally.check(not bad, lambda: f"{quiver.descriptor}: pairs {bad[:3]}")
    return tally.done()


def run_oracle(ctx: SuiteContext) -> SuiteResult:
    """The multiplicity formula against exhaustive search, all small d."""
    tally = _Tally("oracle")
    for quiver in oracle_battery():
        is_a = all(t.family == "A" for t in quiver.dynkin_types)
        total = ctx.max_total_dim if is_a else max(0, ctx.max_total_dim - 2)
        if total > ctx.oracle_bound:
            tally.note(f"{quiver.descriptor}: sweep clipped to the oracle bound {ctx.oracle_bound}")
            total = ctx.oracle_bound
        for d in dims_up_to(quiver.n, total):
            found = ctx.decompose(quiver, d)
            truth = brute_force_rigid(quiver, d, bound=ctx.oracle_bound)
            tally.check(
                found.entries == truth.entries,
                lambda: f"{quiver.descriptor} d={list(d)}: formula {_show(found)}, "
                f"oracle {_show(truth)}",
            )
    return tally.done()


def run_structural(ctx: SuiteContext) -> SuiteResult:
    """Sum and Ext-freeness on random d for the large quivers."""
    tally = _Tally("structural")
    rng = ctx.rng(4)
    for quiver in structural_battery(ctx.max_rank):
        for _ in range(ctx.structural_cases):
            d = _random_d(rng, quiver.n, 4)
            m = ctx.decompose(quiver, d)
            if any(mult < 0 for _, mult in m):
                tally.check(False, lambda: f"{quiver.descriptor} d={list(d)}: negative m")
                continue
            check = check_decomposition(quiver, d, m)
            tally.check(
                check.passed,
                lambda: f"{quiver.descriptor} d={list(d)}: residual {check.residual}, "
                f"{len(check.ext_witnesses)} Ext witnesses",
            )
    return tally.done()


def run_equioriented(ctx: SuiteContext) -> SuiteResult:
    """Closed form on 1 -> ... -> n against the general formula."""
    tally = _Tally("equioriented")
    rng = ctx.rng(5)
    for _ in range(ctx.closed_form_cases):
        n = int(rng.integers(1, ctx.max_rank + 1))
        d = _random_d(rng, n, 6)
        closed = equioriented_multiplicities(n, d)
        general = ctx.decompose(equioriented_quiver(n), d)
        tally.check(
            closed.entries == general.entries,
            lambda: f"n={n} d={list(d)}: closed {_show(closed)}, general {_show(general)}",
        )
    return tally.done()


def run_single_sink(ctx: SuiteContext) -> SuiteResult:
    """Single-sink closed form in both modes; mismatches are recorded as discrepancies."""
    tally = _Tally("single-sink")
    rng = ctx.rng(6)
    cases = [(n, s, d) for n, s, d, _, _ in SINGLE_SINK_WITNESSES]
    max_n = min(7, ctx.max_rank)
    for _ in range(ctx.single_sink_cases):
        n = int(rng.integers(1, max_n + 1))
        cases.append((n, int(rng.integers(1, n + 1)), _random_d(rng, n, 6)))

    seen: set[tuple] = set()
    for n, s, d in cases:
        corrected = single_sink_multiplicities(n, s, d, mode="corrected")
        general = ctx.decompose(single_sink_quiver(n, s), d)
        tally.check(
            corrected.entries == general.entries,
            lambda: f"s={s} n={n} d={list(d)}: corrected {_show(corrected)}, "
            f"general {_show(general)}",
        )
        for record in single_sink_discrepancies(n, s, d):
            key = (n, s, tuple(record.d), record.i, record.j)
            if key in seen:
                continue
            seen.add(key)
            ctx.discrepancies.append(record)
            tally.check(
                record.boundary,
                lambda: f"s={s} n={n} d={list(d)}: mismatch at ({record.i},{record.j}) "
                f"outside the boundary branches ({record.branch})",
            )

    for n, s, d, i, j in SINGLE_SINK_WITNESSES:
        tally.check(
            (n, s, d, i, j) in seen,
            lambda: f"expected mismatch s={s} n={n} d={list(d)} at ({i},{j}) not reproduced",
        )
    boundary = sum(1 for r in ctx.discrepancies if r.branch in BOUNDARY_BRANCHES)
    tally.note(f"{len(seen)} verbatim/corrected mismatches, {boundary} in boundary branches")
    return tally.done()


def run_rank_criterion(ctx: SuiteContext) -> SuiteResult:
    """Constructed rigid modules pass over Q and F_p; a degeneration fails."""
    tally = _Tally("rank-criterion")
    rng = ctx.rng(7)
    fields = (FieldConfig.rationals(), ctx.field)
    skipped = 0
    for _ in range(ctx.random_cases):
        n = int(rng.integers(1, min(6, ctx.max_rank) + 1))
        quiver = _random_orientation(rng, n)
        d = _random_d(rng, n, 5)
        m = rigid_multiplicities(quiver, d)
        for fld in fields:
            report = verify_rank_criterion(quiver, build_rigid_rep(quiver, m, fld), d)
            tally.check(
                report.passed,
                lambda: f"{quiver.descriptor} d={list(d)} over {fld.name}: "
                f"fails at {[(e.i, e.j) for e in report.failures][:3]}",
            )
        degenerate = degenerate_rep(build_rigid_rep(quiver, m, ctx.field))
        if degenerate is None:
            skipped += 1
            continue
        arrow, rep = degenerate
        tally.check(
            not verify_rank_criterion(quiver, rep, d).passed,
            lambda: f"{quiver.descriptor} d={list(d)}: zeroing arrow {arrow + 1} kept every rank",
        )
    if skipped:
        tally.note(f"{skipped} cases had no nonzero arrow map to degenerate")
    return tally.done()


def run_rigidity(ctx: SuiteContext) -> SuiteResult:
    """dim End(V) = <d, d> for the constructed rigid module."""
    tally = _Tally("rigidity")
    rng = ctx.rng(8)
    for _ in range(ctx.random_cases):
        n = int(rng.integers(1, min(6, ctx.max_rank) + 1))
        quiver = _random_orientation(rng, n)
        d = _random_d(rng, n, 4)
        rep = build_rigid_rep(quiver, rigid_multiplicities(quiver, d), ctx.field)
        defect = rigidity_defect(rep)
        tally.check(defect == 0, lambda: f"{quiver.descriptor} d={list(d)}: defect {defect}")
    return tally.done()


def hom_samples(
    quiver: Quiver, d: DimVector, field: FieldConfig, samples: int, rng: np.random.Generator
) -> list[tuple[DimVector, int, int]]:
    """(alpha, hom(U_alpha, W), hom(alpha, d)) for every root alpha and random W of dimension d.

    Each sampled W is compared against every positive root.
    """
    sources = []
    for alpha in positive_roots(quiver).roots:
        first = alpha.index(1) + 1
        last = len(alpha) - alpha[::-1].index(1)
        source = interval_rep(quiver, first, last, field)
        sources.append((alpha, source, hom_root_to(quiver, alpha, d)))
    rows = []
    for _ in range(samples):
        sample = random_rep(quiver, d, field, seed=int(rng.integers(0, 2**63)))
        for alpha, source, generic in sources:
            rows.append((alpha, hom_space_dim(source, sample), generic))
    return rows


def run_semicontinuity(ctx: SuiteContext) -> SuiteResult:
    """hom(U_alpha, W) >= hom(alpha, d) for every root and random W, with equality almost always."""
    tally = _Tally("semicontinuity")
    rng = ctx.rng(9)
    equal = 0
    cases = max(1, ctx.random_cases // 50) if ctx.samples else 0
    for _ in range(cases):
        n = int(rng.integers(2, 5))
        quiver = _random_orientation(rng, n)
        d = _random_d(rng, n, 2)
        while sum(d) > 8:
            d = _random_d(rng, n, 2)
        for alpha, value, generic in hom_samples(quiver, d, ctx.field, ctx.samples, rng):
            tally.check(
                value >= generic,
                lambda: f"{quiver.descriptor} d={list(d)} alpha={alpha}: "
                f"hom {value} < generic {generic}",
            )
            equal += value == generic
    if tally.result.cases:
        rate = equal / tally.result.cases
        tally.note(f"equality rate {rate:.3f}")
        tally.check(
            rate >= SEMICONTINUITY_EQUALITY_RATE,
            lambda: f"equality rate {rate:.3f} below {SEMICONTINUITY_EQUALITY_RATE}",
        )
    return tally.done()


SUITES: dict[str, Callable[[SuiteContext], SuiteResult]] = {
    "roots": run_roots,
    "coxeter": run_coxeter,
    "oracle": run_oracle,
    "structural": run_structural,
    "equioriented": run_equioriented,
    "single-sink": run_single_sink,
    "rank-criterion": run_rank_criterion,
    "rigidity": run_rigidity,
    "semicontinuity": run_semicontinuity,
}
