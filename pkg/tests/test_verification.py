"""Tests for the verification suites, the runner and decomposition reports."""

import numpy as np
import pytest

from rigid_quiver.config import Config, VerificationConfig
from rigid_quiver.errors import NotTypeAError
from rigid_quiver.linalg import FieldConfig
from rigid_quiver.quiver import builtin_quiver
from rigid_quiver.roots import positive_roots
from rigid_quiver.verification import (
    SUITES,
    SuiteContext,
    VerificationRunner,
    compare_decomposition,
    decomposition_report,
    dims_up_to,
    hom_samples,
    oracle_battery,
    sink_position,
)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def small_context(**overrides):
    params = dict(
        seed=1,
        max_total_dim=3,
        samples=5,
        random_cases=4,
        closed_form_cases=10,
        single_sink_cases=5,
        structural_cases=2,
        max_rank=4,
    )
    params.update(overrides)
    return SuiteContext(**params)


def small_config():
    return Config(
        seed=3,
        verification=VerificationConfig(
            max_total_dim=3,
            samples=5,
            random_cases=4,
            closed_form_cases=10,
            single_sink_cases=5,
            structural_cases=2,
            max_rank=4,
        ),
    )


# ---------------------------------------------------------------------------
# Batteries
# ---------------------------------------------------------------------------


class TestBatteries:
    def test_dims_up_to(self):
        assert list(dims_up_to(2, 2)) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]

    def test_dims_up_to_counts(self):
        # C(n + total, n) vectors
        assert len(list(dims_up_to(4, 3))) == 35

    def test_oracle_battery(self):
        quivers = oracle_battery()
        assert len(quivers) == 2 + 4 + 8 + 4
        assert len({(q.n, q.arrows) for q in quivers}) == len(quivers)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


class TestSuites:
    @pytest.mark.parametrize("name", list(SUITES))
    def test_passes_at_small_size(self, name):
        result = SUITES[name](small_context())
        assert result.passed, result.witnesses
        assert result.cases > 0

    def test_registry_order(self):
        assert list(SUITES) == [
            "roots",
            "coxeter",
            "oracle",
            "structural",
            "equioriented",
            "single-sink",
            "rank-criterion",
            "rigidity",
            "semicontinuity",
        ]

    def test_single_sink_records_discrepancies(self):
        ctx = small_context()
        SUITES["single-sink"](ctx)
        found = {(r.n, r.s, tuple(r.d), r.i, r.j) for r in ctx.discrepancies}
        assert (3, 2, (1, 2, 1), 2, 2) in found
        assert (3, 2, (1, 1, 1), 1, 2) in found
        assert all(r.boundary for r in ctx.discrepancies)

    @pytest.mark.parametrize("name", ["oracle", "equioriented"])
    def test_injected_fault_is_detected(self, name):
        result = SUITES[name](small_context(inject_fault=True))
        assert not result.passed
        assert result.witnesses

    def test_witnesses_are_capped(self):
        result = SUITES["oracle"](small_context(inject_fault=True))
        assert result.failures > len(result.witnesses) == 5

    def test_oracle_sweep_clipped_to_bound(self):
        result = SUITES["oracle"](small_context(max_total_dim=3, oracle_bound=2))
        assert result.passed
        assert any("clipped to the oracle bound 2" in note for note in result.notes)

    def test_semicontinuity_checks_every_root(self):
        quiver = builtin_quiver("A", 3, "><")
        field = FieldConfig.prime(32003)
        rows = hom_samples(quiver, (1, 2, 1), field, 3, np.random.default_rng(0))
        assert len(rows) == 3 * 6
        assert {alpha for alpha, _, _ in rows} == set(positive_roots(quiver).roots)
        assert all(value >= generic for _, value, generic in rows)

    def test_semicontinuity_cases_cover_roots_per_sample(self):
        result = SUITES["semicontinuity"](small_context(samples=2))
        assert result.passed
        # the final check is the equality rate
        assert (result.cases - 1) % 2 == 0
        assert (result.cases - 1) // 2 >= 3

    def test_same_seed_same_cases(self):
        first = SUITES["rank-criterion"](small_context(seed=5))
        second = SUITES["rank-criterion"](small_context(seed=5))
        assert (first.cases, first.notes) == (second.cases, second.notes)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


class TestVerificationRunner:
    def test_runs_requested_suites_in_registry_order(self):
        runner = VerificationRunner(
            small_config(), suites=["equioriented", "roots"], show_progress=False
        )
        report = runner.run()
        assert [s.name for s in report.suites] == ["roots", "equioriented"]
        assert report.passed
        assert report.seed == 3

    def test_overrides(self):
        runner = VerificationRunner(
            small_config(), seed=11, max_total_dim=2, samples=1, show_progress=False
        )
        ctx = runner.context
        assert (ctx.seed, ctx.max_total_dim, ctx.samples) == (11, 2, 1)
        assert ctx.random_cases == 4

    def test_oracle_bound_from_config(self):
        config = small_config()
        config.oracle.max_total_dim = 2
        runner = VerificationRunner(config, suites=["oracle"], show_progress=False)
        assert runner.context.oracle_bound == 2
        assert runner.run().passed

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="Unknown suites"):
            VerificationRunner(small_config(), suites=["nope"])

    def test_callback_sees_every_suite(self):
        seen = []
        runner = VerificationRunner(
            small_config(), suites=["roots", "coxeter"], on_suite=seen.append, show_progress=False
        )
        runner.run()
        assert [s.name for s in seen] == ["roots", "coxeter"]

    def test_crashing_suite_is_a_failure(self, monkeypatch):
        def boom(ctx):
            raise RuntimeError("kaboom")

        monkeypatch.setitem(SUITES, "roots", boom)
        report = VerificationRunner(small_config(), suites=["roots"], show_progress=False).run()
        assert not report.passed
        assert "kaboom" in report.suites[0].witnesses[0]

    def test_fault_flag_reported(self):
        runner = VerificationRunner(
            small_config(), suites=["oracle"], inject_fault=True, show_progress=False
        )
        report = runner.run()
        assert report.fault_injected
        assert not report.passed


# ---------------------------------------------------------------------------
# Decomposition reports
# ---------------------------------------------------------------------------


class TestReports:
    @pytest.mark.parametrize(
        "orientation, expected",
        [(">>", 3), ("<<", 1), ("><", 2), ("<>", None)],
    )
    def test_sink_position(self, orientation, expected):
        assert sink_position(builtin_quiver("A", 3, orientation)) == expected

    def test_sink_position_of_d4(self):
        assert sink_position(builtin_quiver("D", 4)) is None

    def test_report(self):
        report = decomposition_report(builtin_quiver("A", 3, "><"), (1, 2, 1))
        assert [(s.root, s.mult) for s in report.summands] == [([0, 1, 1], 1), ([1, 1, 0], 1)]
        assert report.checks.sum and report.checks.ext_free
        assert len(report.discrepancies) == 1

    def test_verbatim_report(self):
        report = decomposition_report(builtin_quiver("A", 3, "><"), (1, 1, 1), mode="verbatim")
        assert not report.checks.sum
        assert sorted(s.root for s in report.summands) == [[0, 1, 1], [1, 1, 0], [1, 1, 1]]

    def test_verbatim_needs_single_sink(self):
        with pytest.raises(NotTypeAError):
            decomposition_report(builtin_quiver("D", 4), (1, 1, 1, 1), mode="verbatim")

    def test_compare_round_trip(self):
        text = decomposition_report(builtin_quiver("D", 5), (1, 2, 2, 1, 1)).model_dump_json()
        result = compare_decomposition(text)
        assert result.passed
        assert result.name == "compare"

    def test_verbatim_report_round_trips_in_its_mode(self):
        report = decomposition_report(builtin_quiver("A", 3, "><"), (1, 1, 1), mode="verbatim")
        assert report.mode == "verbatim"
        assert compare_decomposition(report.model_dump_json()).passed

    def test_compare_detects_changed_mode(self):
        report = decomposition_report(builtin_quiver("A", 3, "><"), (1, 1, 1), mode="verbatim")
        report.mode = "corrected"
        assert not compare_decomposition(report.model_dump_json()).passed

    def test_compare_detects_edit(self):
        report = decomposition_report(builtin_quiver("A", 2), (2, 1))
        report.summands[0].mult += 1
        result = compare_decomposition(report.model_dump_json())
        assert not result.passed
        assert result.witnesses

    def test_compare_rejects_garbage(self):
        with pytest.raises(ValueError, match="Not a decomposition report"):
            compare_decomposition("[]")
