"""Decomposition reports and the JSON round-trip check."""

from __future__ import annotations

import logging
import time
from typing import Optional, Sequence

from pydantic import ValidationError

from ..errors import NotTypeAError
from ..models.schemas import Checks, DecompositionReport, Summand, SuiteResult
from ..quiver.core import Quiver, as_dim_vector
from ..quiver.dynkin import is_type_a_path
from ..quiver.parsing import parse_quiver, single_sink_quiver
from ..rigid.decomposition import check_decomposition, rigid_multiplicities
from ..typea.closed_forms import (
    SingleSinkMode,
    single_sink_discrepancies,
    single_sink_multiplicities,
)

logger = logging.getLogger(__name__)


def sink_position(quiver: Quiver) -> Optional[int]:
    """s if the quiver is 1 -> ... -> s <- ... <- n, else None."""
    if not is_type_a_path(quiver):
        return None
    arrows = set(quiver.arrows)
    for s in quiver.vertices:
        if arrows == set(single_sink_quiver(quiver.n, s).arrows):
            return s
    return None


def decomposition_report(
    quiver: Quiver, d: Sequence[int], *, mode: SingleSinkMode = "corrected"
) -> DecompositionReport:
    """Decompose d and check the result.

    Single-sink quivers also carry the verbatim-vs-corrected discrepancies of
    the literal closed form; with mode="verbatim" their summands come from the
    literal branches instead of the general formula.

    Raises:
        NotTypeAError: If mode is "verbatim" and the quiver is not single-sink
    """
    started = time.perf_counter()
    d = as_dim_vector(d, quiver.n)
    s = sink_position(quiver)
    if mode == "verbatim":
        if s is None:
            raise NotTypeAError(
                f"Verbatim mode needs a single-sink quiver, got {quiver.descriptor}"
            )
        m = single_sink_multiplicities(quiver.n, s, d, mode="verbatim")
    else:
        m = rigid_multiplicities(quiver, d)
    check = check_decomposition(quiver, d, m)
    discrepancies = single_sink_discrepancies(quiver.n, s, d) if s else []
    return DecompositionReport(
        quiver=quiver.descriptor,
        d=list(d),
        mode=mode,
        summands=[Summand(root=list(alpha), mult=mult) for alpha, mult in m],
        checks=Checks(sum=check.sum_ok, ext_free=check.ext_free),
        support_within_bound=check.support_within_bound,
        ext_witnesses=check.ext_witnesses,
        discrepancies=discrepancies,
        elapsed_seconds=round(time.perf_counter() - started, 6),
    )


def compare_decomposition(text: str) -> SuiteResult:
    """Re-evaluate a ``decompose --format json`` report in its stored mode and compare contents.

    Raises:
        ValueError: If text is not a decomposition report
        QuiverError: If its quiver descriptor does not parse
    """
    try:
        stored = DecompositionReport.model_validate_json(text)
    except ValidationError as e:
        raise ValueError(f"Not a decomposition report: {e.error_count()} validation errors") from e

    started = time.perf_counter()
    fresh = decomposition_report(parse_quiver(stored.quiver), stored.d, mode=stored.mode)
    result = SuiteResult(name="compare", cases=1)
    if fresh.content_key() != stored.content_key():
        result.failures = 1
        result.witnesses.append(
            f"{stored.quiver} d={stored.d}: stored summands "
            f"{[(s.root, s.mult) for s in stored.summands]}, fresh "
            f"{[(s.root, s.mult) for s in fresh.summands]}"
        )
        logger.warning(f"Stored report for d={stored.d} differs from a fresh evaluation")
    result.elapsed_seconds = round(time.perf_counter() - started, 3)
    return result
