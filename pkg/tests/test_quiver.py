"""Unit tests for the quiver model, parsing and Dynkin classification."""

import numpy as np
import pytest

from rigid_quiver.errors import (
    DimensionVectorError,
    EulerOverflowError,
    NotDynkinError,
    QuiverError,
)
from rigid_quiver.quiver import (
    Quiver,
    as_dim_vector,
    builtin_quiver,
    cartan_pairing,
    classify_dynkin,
    equioriented_quiver,
    euler_form,
    euler_matrix,
    is_type_a_path,
    load_quiver,
    parse_quiver,
    single_sink_quiver,
    type_a_orientations,
)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

A2 = Quiver.from_arrows(2, [(1, 2)])

D4_FILE = """\
# D4 with the branch vertex in the middle
vertices 4
arrow 1 2
arrow 3 2   # points inward
arrow 4 2
"""


# ---------------------------------------------------------------------------
# Quiver construction
# ---------------------------------------------------------------------------


class TestQuiver:
    def test_vertices_are_one_based(self):
        assert list(A2.vertices) == [1, 2]

    def test_loop_rejected(self):
        with pytest.raises(QuiverError, match="Loop"):
            Quiver.from_arrows(2, [(1, 1)])

    def test_duplicate_edge_rejected_in_either_direction(self):
        with pytest.raises(QuiverError, match="Duplicate"):
            Quiver.from_arrows(2, [(1, 2), (2, 1)])

    def test_vertex_out_of_range(self):
        with pytest.raises(QuiverError, match="out of range"):
            Quiver.from_arrows(2, [(1, 3)])

    def test_empty_quiver_rejected(self):
        with pytest.raises(QuiverError):
            Quiver.from_arrows(0, [])

    def test_reversed_flips_every_arrow(self):
        q = builtin_quiver("A", 3, "><")
        assert q.reversed().arrows == ((2, 1), (2, 3))

    def test_label_does_not_affect_equality(self):
        assert builtin_quiver("A", 2) == A2

    def test_descriptor_round_trips_through_parser(self):
        q = Quiver.from_arrows(3, [(2, 1), (2, 3)])
        assert parse_quiver(q.descriptor) == q

    def test_components_sorted_by_smallest_vertex(self):
        q = Quiver.from_arrows(4, [(3, 4), (1, 2)])
        assert q.components() == [(1, 2), (3, 4)]

    def test_restrict_relabels(self):
        q = builtin_quiver("A", 4, "><>")
        assert q.restrict([2, 3, 4]).arrows == ((2, 1), (2, 3))


# ---------------------------------------------------------------------------
# Euler form
# ---------------------------------------------------------------------------


class TestEulerForm:
    def test_euler_matrix(self):
        np.testing.assert_array_equal(euler_matrix(A2), [[1, -1], [0, 1]])

    def test_simple_roots(self):
        assert euler_form(A2, (1, 0), (0, 1)) == -1
        assert euler_form(A2, (0, 1), (1, 0)) == 0
        assert euler_form(A2, (1, 0), (1, 0)) == 1

    def test_form_of_a_root_with_itself_is_one(self):
        assert euler_form(A2, (1, 1), (1, 1)) == 1

    def test_cartan_pairing_ignores_orientation(self):
        q = builtin_quiver("A", 3, "><")
        d, e = (1, 2, 0), (0, 1, 3)
        assert cartan_pairing(q, d, e) == cartan_pairing(q.reversed(), d, e)

    def test_length_mismatch(self):
        with pytest.raises(DimensionVectorError):
            euler_form(A2, (1, 0, 0), (1, 0))

    def test_overflow_detected(self):
        with pytest.raises(EulerOverflowError):
            euler_form(A2, (2**40, 0), (2**40, 0))


class TestDimVector:
    def test_accepts_strings_of_integers(self):
        assert as_dim_vector(["1", "2"], 2) == (1, 2)

    @pytest.mark.parametrize(
        "values",
        [(1,), (1, -1), (1, "x"), (10**7, 0)],
        ids=["short", "negative", "not-int", "too-large"],
    )
    def test_rejects(self, values):
        with pytest.raises(DimensionVectorError):
            as_dim_vector(values, 2)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class TestParsing:
    def test_arrow_file(self):
        q = parse_quiver(D4_FILE)
        assert q.n == 4
        assert q.arrows == ((1, 2), (3, 2), (4, 2))
        assert [t.name for t in q.dynkin_types] == ["D4"]

    def test_semicolons_replace_newlines(self):
        assert parse_quiver("vertices 2; arrow 1 2") == A2

    @pytest.mark.parametrize(
        "descriptor, arrows",
        [
            ("A3", ((1, 2), (2, 3))),
            ("A3:><", ((1, 2), (3, 2))),
            ("A3:<<", ((2, 1), (3, 2))),
            ("A1", ()),
        ],
    )
    def test_type_a_descriptors(self, descriptor, arrows):
        assert parse_quiver(descriptor).arrows == arrows

    def test_builtin_labels(self):
        assert parse_quiver("A3").descriptor == "A3:>>"
        assert parse_quiver("E6").descriptor == "E6"

    def test_orientation_length_checked(self):
        with pytest.raises(QuiverError, match="length"):
            parse_quiver("A3:>")

    def test_orientation_not_allowed_for_d(self):
        with pytest.raises(QuiverError):
            builtin_quiver("D", 4, ">>>")

    @pytest.mark.parametrize(
        "text, error",
        [
            ("arrow 1 2", "before 'vertices'"),
            ("vertices 2; arrow 1", "expected 'arrow"),
            ("vertices 2; edge 1 2", "unknown keyword"),
            ("vertices two", "expected integers"),
            ("# nothing here", "no 'vertices'"),
        ],
    )
    def test_malformed_text(self, text, error):
        with pytest.raises(QuiverError, match=error):
            parse_quiver(text)

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_quiver(tmp_path / "missing.txt")

    def test_load_file(self, tmp_path):
        path = tmp_path / "d4.txt"
        path.write_text(D4_FILE)
        assert load_quiver(path).n == 4


# ---------------------------------------------------------------------------
# Dynkin classification
# ---------------------------------------------------------------------------


class TestClassification:
    @pytest.mark.parametrize(
        "family, rank",
        [("A", 1), ("A", 5), ("D", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8)],
    )
    def test_builtins_classify_as_themselves(self, family, rank):
        (kind,) = classify_dynkin(builtin_quiver(family, rank))
        assert (kind.family, kind.rank) == (family, rank)

    def test_relabeled_e6(self):
        # branch vertex 1 with arms of length 1, 2 and 2
        q = parse_quiver("vertices 6; arrow 1 2; arrow 1 3; arrow 3 4; arrow 1 5; arrow 5 6")
        assert [t.name for t in q.dynkin_types] == ["E6"]

    def test_disconnected_quiver(self):
        q = parse_quiver("vertices 5; arrow 1 2; arrow 4 3; arrow 3 5")
        assert [t.name for t in q.dynkin_types] == ["A2", "A3"]
        assert [t.vertices for t in q.dynkin_types] == [(1, 2), (3, 4, 5)]

    def test_isolated_vertex_is_a1(self):
        q = parse_quiver("vertices 2")
        assert [t.name for t in q.dynkin_types] == ["A1", "A1"]

    @pytest.mark.parametrize(
        "text",
        [
            "vertices 3; arrow 1 2; arrow 2 3; arrow 3 1",
            "vertices 5; arrow 1 2; arrow 1 3; arrow 1 4; arrow 1 5",
            "vertices 6; arrow 1 2; arrow 2 3; arrow 2 4; arrow 4 5; arrow 5 6; arrow 3 1",
            "vertices 7; arrow 1 2; arrow 2 3; arrow 3 4; arrow 4 5; arrow 3 6; arrow 6 7",
        ],
        ids=["cycle", "star", "cycle-with-tail", "affine-e6"],
    )
    def test_not_dynkin(self, text):
        with pytest.raises(NotDynkinError):
            parse_quiver(text)

    def test_root_counts(self):
        counts = {
            q.dynkin_types[0].name: q.dynkin_types[0].root_count()
            for q in (builtin_quiver("A", 4), builtin_quiver("D", 5), builtin_quiver("E", 8))
        }
        assert counts == {"A4": 10, "D5": 20, "E8": 120}


class TestTypeAHelpers:
    def test_equioriented(self):
        assert equioriented_quiver(3).arrows == ((1, 2), (2, 3))

    def test_single_sink(self):
        assert single_sink_quiver(4, 2).arrows == ((1, 2), (3, 2), (4, 3))

    def test_single_sink_out_of_range(self):
        with pytest.raises(QuiverError):
            single_sink_quiver(3, 4)

    def test_all_orientations(self):
        quivers = type_a_orientations(4)
        assert len(quivers) == 8
        assert len({q.arrows for q in quivers}) == 8
        assert all(is_type_a_path(q) for q in quivers)

    def test_d4_is_not_a_path(self):
        assert not is_type_a_path(builtin_quiver("D", 4))
