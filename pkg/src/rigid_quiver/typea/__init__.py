"""Type A: interval roots, closed forms, explicit rigid modules and rank tuples."""

from .closed_forms import (
    IntervalRoot,
    closed_subsets,
    equioriented_multiplicities,
    intervals,
    single_sink_branch,
    single_sink_discrepancies,
    single_sink_multiplicities,
)
from .construct import build_rigid_rep, interval_rep, require_type_a
from .ranks import (
    IntervalData,
    RankTuple,
    SinkSourceData,
    composite_rank_tuple,
    degenerate_rep,
    rank_targets,
    rank_tuple_of,
    sink_source_data,
    verify_rank_criterion,
)

__all__ = [
    "IntervalData",
    "IntervalRoot",
    "RankTuple",
    "SinkSourceData",
    "build_rigid_rep",
    "closed_subsets",
    "composite_rank_tuple",
    "degenerate_rep",
    "equioriented_multiplicities",
    "interval_rep",
    "intervals",
    "rank_targets",
    "rank_tuple_of",
    "require_type_a",
    "single_sink_branch",
    "single_sink_discrepancies",
    "single_sink_multiplicities",
    "sink_source_data",
    "verify_rank_criterion",
]
