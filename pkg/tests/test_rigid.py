"""Unit tests for the rigid decomposition, its checks and the brute-force oracle."""

import pytest

from rigid_quiver.errors import DimensionVectorError, NotARootError, OracleBoundError
from rigid_quiver.quiver import builtin_quiver, type_a_orientations
from rigid_quiver.rigid import (
    MultiplicityFunction,
    brute_force_rigid,
    check_decomposition,
    generic_hom_from_decomposition,
    hom_root_to,
    rigid_multiplicities,
)
from rigid_quiver.roots import positive_roots
from rigid_quiver.verification import dims_up_to


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

A2 = builtin_quiver("A", 2)
D4 = builtin_quiver("D", 4)


def as_dict(quiver, d):
    return rigid_multiplicities(quiver, d).as_dict()


# ---------------------------------------------------------------------------
# Multiplicity formula
# ---------------------------------------------------------------------------


class TestRigidMultiplicities:
    @pytest.mark.parametrize(
        "descriptor, d, expected",
        [
            ("A2", (2, 1), {(1, 0): 1, (1, 1): 1}),
            ("A2", (1, 2), {(0, 1): 1, (1, 1): 1}),
            ("A2:<", (2, 1), {(1, 0): 1, (1, 1): 1}),
            ("A3:><", (1, 2, 1), {(1, 1, 0): 1, (0, 1, 1): 1}),
            ("A3", (1, 2, 1), {(0, 1, 0): 1, (1, 1, 1): 1}),
            ("A3", (1, 1, 1), {(1, 1, 1): 1}),
            ("A3", (0, 3, 0), {(0, 1, 0): 3}),
        ],
    )
    def test_hand_checked(self, descriptor, d, expected):
        q = builtin_quiver("A", int(descriptor[1]), descriptor[3:] or None)
        assert as_dict(q, d) == expected

    def test_zero_vector_has_no_summands(self):
        m = rigid_multiplicities(D4, (0, 0, 0, 0))
        assert len(m) == 0
        assert m.total() == (0, 0, 0, 0)

    @pytest.mark.parametrize(
        "quiver",
        [builtin_quiver("D", 5), builtin_quiver("E", 6).reversed()],
        ids=["D5", "E6-reversed"],
    )
    def test_root_is_its_own_decomposition(self, quiver):
        for alpha in positive_roots(quiver):
            assert as_dict(quiver, alpha) == {alpha: 1}

    def test_scaling_a_root(self):
        assert as_dict(D4, (2, 4, 2, 2)) == {(1, 2, 1, 1): 2}

    def test_total_recovers_d(self):
        d = (3, 1, 4, 1, 5)
        q = builtin_quiver("D", 5)
        assert rigid_multiplicities(q, d).total() == d

    def test_invalid_d(self):
        with pytest.raises(DimensionVectorError):
            rigid_multiplicities(A2, (1, 2, 3))

    def test_unclamped_values_go_negative(self):
        m = rigid_multiplicities(A2, (0, 1), clamp=False)
        assert m[(1, 0)] < 0

    def test_generic_hom_agrees_with_decomposition(self):
        q = builtin_quiver("A", 4, "<><")
        d = (2, 3, 1, 2)
        m = rigid_multiplicities(q, d)
        for alpha in positive_roots(q):
            assert generic_hom_from_decomposition(q, alpha, m) == hom_root_to(q, alpha, d)


class TestMultiplicityFunction:
    def test_zeros_dropped_and_sorted(self):
        m = MultiplicityFunction.from_mapping(A2, {(1, 1): 1, (1, 0): 2, (0, 1): 0})
        assert m.entries == (((1, 0), 2), ((1, 1), 1))
        assert m.support == [(1, 0), (1, 1)]
        assert m[(0, 1)] == 0

    def test_by_index(self):
        m = MultiplicityFunction.from_mapping(A2, {(1, 1): 3})
        assert m.by_index() == {2: 3}

    def test_negative_rejected(self):
        with pytest.raises(ValueError, match="non-negative"):
            MultiplicityFunction.from_mapping(A2, {(1, 0): -1})

    def test_non_root_rejected(self):
        with pytest.raises(NotARootError):
            MultiplicityFunction.from_mapping(A2, {(2, 1): 1})


# ---------------------------------------------------------------------------
# Decomposition checks
# ---------------------------------------------------------------------------


class TestCheckDecomposition:
    def test_rigid_decomposition_passes(self):
        d = (2, 1, 3, 1)
        check = check_decomposition(D4, d, rigid_multiplicities(D4, d))
        assert check.passed
        assert check.support_within_bound
        assert check.residual == [0, 0, 0, 0]

    def test_ext_witness_reported(self):
        check = check_decomposition(A2, (1, 1), {(1, 0): 1, (0, 1): 1})
        assert check.sum_ok
        assert not check.ext_free
        assert not check.passed
        (witness,) = check.ext_witnesses
        assert (witness.source, witness.target, witness.ext) == ([1, 0], [0, 1], 1)

    def test_residual_reported(self):
        check = check_decomposition(A2, (1, 1), {(1, 0): 1})
        assert not check.sum_ok
        assert check.residual == [0, 1]


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------


class TestOracle:
    @pytest.mark.parametrize("quiver", type_a_orientations(3), ids=lambda q: q.descriptor)
    def test_agrees_with_formula_on_a3(self, quiver):
        for d in dims_up_to(3, 5):
            expected = rigid_multiplicities(quiver, d)
            assert brute_force_rigid(quiver, d).entries == expected.entries

    def test_agrees_with_formula_on_d4(self):
        for q in (D4, D4.reversed()):
            for d in dims_up_to(4, 4):
                assert brute_force_rigid(q, d).entries == rigid_multiplicities(q, d).entries

    def test_highest_root_of_d4(self):
        assert brute_force_rigid(D4, (1, 2, 1, 1)).as_dict() == {(1, 2, 1, 1): 1}

    def test_zero_vector(self):
        assert len(brute_force_rigid(A2, (0, 0))) == 0

    def test_bound(self):
        with pytest.raises(OracleBoundError):
            brute_force_rigid(A2, (3, 3), bound=5)
