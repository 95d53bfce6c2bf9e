"""Batch verification: suites, the runner and decomposition reports."""

from .reports import compare_decomposition, decomposition_report, sink_position
from .runner import VerificationRunner
from .suites import SUITES, SuiteContext, dims_up_to, hom_samples, oracle_battery

__all__ = [
    "SUITES",
    "SuiteContext",
    "VerificationRunner",
    "compare_decomposition",
    "decomposition_report",
    "dims_up_to",
    "hom_samples",
    "oracle_battery",
    "sink_position",
]
