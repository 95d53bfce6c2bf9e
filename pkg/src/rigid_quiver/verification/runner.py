"""Runs the verification suites and collects one report."""

import logging
import time
from typing import Callable, Optional, Sequence

from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from ..config import Config
from ..models.schemas import SuiteResult, VerificationReport
from .suites import SUITES, SuiteContext

logger = logging.getLogger(__name__)
# stdout carries the report itself
console = Console(stderr=True)


class VerificationRunner:
    """Runs the named suites in a fixed order.

    Suites never raise for failed checks; an exception inside a suite is
    recorded as a failure of that suite and the run continues.
    """

    def __init__(
        self,
        config: Config,
        seed: Optional[int] = None,
        max_total_dim: Optional[int] = None,
        samples: Optional[int] = None,
        inject_fault: bool = False,
        suites: Optional[Sequence[str]] = None,
        on_suite: Optional[Callable[[SuiteResult], None]] = None,
        show_progress: bool = True,
    ):
        """Initialize the runner.

        Args:
            config: Application configuration (suite sizes and defaults)
            seed: Overrides config.seed
            max_total_dim: Overrides config.verification.max_total_dim
            samples: Overrides config.verification.samples
            inject_fault: Evaluate multiplicities without the final clamp
            suites: Names to run (default: all, in registry order)
            on_suite: Optional callback after each suite
            show_progress: Draw a progress bar on stderr
        """
        names = list(SUITES) if suites is None else list(suites)
        unknown = [name for name in names if name not in SUITES]
        if unknown:
            raise ValueError(f"Unknown suites {unknown}; choose from {list(SUITES)}")
        # registry order regardless of how they were requested
        self.suite_names = [name for name in SUITES if name in names]

        verification = config.verification
        self.context = SuiteContext(
            seed=config.seed if seed is None else seed,
            max_total_dim=verification.max_total_dim if max_total_dim is None else max_total_dim,
            samples=verification.samples if samples is None else samples,
            random_cases=verification.random_cases,
            closed_form_cases=verification.closed_form_cases,
            single_sink_cases=verification.single_sink_cases,
            structural_cases=verification.structural_cases,
            max_rank=verification.max_rank,
            prime=config.field.prime,
            oracle_bound=config.oracle.max_total_dim,
            inject_fault=inject_fault,
        )
        self.on_suite = on_suite
        self.show_progress = show_progress

    def run(self) -> VerificationReport:
        """Run every selected suite and return the combined report."""
        ctx = self.context
        logger.info(
            f"Verification run: seed={ctx.seed} max_total_dim={ctx.max_total_dim} "
            f"samples={ctx.samples} suites={self.suite_names}"
        )
        if ctx.inject_fault:
            logger.warning("Fault injection enabled: multiplicities are not clamped")

        started = time.perf_counter()
        results = []
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("{task.completed}/{task.total}"),
            console=console,
            disable=not self.show_progress,
            transient=True,
        ) as progress:
            task = progress.add_task("Verifying", total=len(self.suite_names))
            for name in self.suite_names:
                progress.update(task, description=f"Suite {name}")
                result = self._run_suite(name)
                results.append(result)
                if self.on_suite:
                    self.on_suite(result)
                progress.advance(task)

        report = VerificationReport(
            seed=ctx.seed,
            max_total_dim=ctx.max_total_dim,
            samples=ctx.samples,
            fault_injected=ctx.inject_fault,
            suites=results,
            discrepancies=ctx.discrepancies,
            elapsed_seconds=round(time.perf_counter() - started, 3),
        )
        self._log_completion(report)
        return report

    def _run_suite(self, name: str) -> SuiteResult:
        try:
            return SUITES[name](self.context)
        except Exception as e:
            logger.exception(f"Suite {name} crashed: {e}")
            return SuiteResult(name=name, cases=1, failures=1, witnesses=[f"crashed: {e}"])

    def _log_completion(self, report: VerificationReport) -> None:
        failed = [suite.name for suite in report.suites if not suite.passed]
        logger.info(f"Verification finished in {report.elapsed_seconds:.1f}s")
        logger.info(f"Discrepancies recorded: {len(report.discrepancies)}")
        if failed:
            logger.warning(f"Failed suites: {failed}")
        else:
            logger.info("All suites passed")
