"""Property-based tests: algebraic invariants of the Euler form and the rigid decomposition."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from rigid_quiver.linalg import FieldConfig, hom_space_dim, integer_inverse, matrix_rank
from rigid_quiver.quiver import Quiver, classify_dynkin, euler_form, euler_matrix
from rigid_quiver.quiver.dynkin import standard_edges
from rigid_quiver.rigid import (
    check_decomposition,
    generic_hom_from_decomposition,
    hom_root_to,
    quot_dim_vectors,
    rigid_multiplicities,
    sub_dim_vectors,
)
from rigid_quiver.roots import coxeter_inverse, hom_dim, positive_roots
from rigid_quiver.typea import (
    build_rigid_rep,
    equioriented_multiplicities,
    rank_tuple_of,
    verify_rank_criterion,
)


# ---------------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------------

DIAGRAMS = [("A", n) for n in range(1, 6)] + [("D", 4), ("D", 5), ("E", 6)]


@st.composite
def dynkin_quivers(draw, diagrams=DIAGRAMS):
    """A standard diagram with every edge oriented at random."""
    family, rank = draw(st.sampled_from(diagrams))
    edges = standard_edges(family, rank)
    flips = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    arrows = [(b, a) if flip else (a, b) for (a, b), flip in zip(edges, flips)]
    return Quiver.from_arrows(rank, arrows)


@st.composite
def quivers_with_dims(draw, diagrams=DIAGRAMS, max_entry=3):
    quiver = draw(dynkin_quivers(diagrams))
    d = draw(st.lists(st.integers(0, max_entry), min_size=quiver.n, max_size=quiver.n))
    return quiver, tuple(d)


def vectors(n, low=-5, high=5):
    return st.lists(st.integers(low, high), min_size=n, max_size=n).map(tuple)


TYPE_A = [("A", n) for n in range(1, 6)]


# ---------------------------------------------------------------------------
# Euler form and Coxeter map
# ---------------------------------------------------------------------------


class TestEulerFormLaws:
    @settings(deadline=None)
    @given(quiver=dynkin_quivers(), data=st.data())
    def test_bilinear(self, quiver, data):
        d, d2, e = (data.draw(vectors(quiver.n)) for _ in range(3))
        total = tuple(a + b for a, b in zip(d, d2))
        assert euler_form(quiver, total, e) == euler_form(quiver, d, e) + euler_form(
            quiver, d2, e
        )

    @settings(deadline=None)
    @given(quiver=dynkin_quivers(), data=st.data())
    def test_positive_definite(self, quiver, data):
        d = data.draw(vectors(quiver.n))
        assert euler_form(quiver, d, d) > 0 or not any(d)

    @settings(deadline=None)
    @given(quiver=dynkin_quivers(), data=st.data())
    def test_coxeter_identity(self, quiver, data):
        d, e = data.draw(vectors(quiver.n)), data.draw(vectors(quiver.n))
        cox = coxeter_inverse(quiver)
        assert euler_form(quiver, cox.apply(d), e) == -euler_form(quiver, e, d)


# ---------------------------------------------------------------------------
# Classification and roots
# ---------------------------------------------------------------------------


class TestRootSystemLaws:
    @settings(deadline=None)
    @given(quiver=dynkin_quivers())
    def test_euler_matrix_unimodular(self, quiver):
        e = euler_matrix(quiver)
        assert round(np.linalg.det(e.astype(float))) in (1, -1)
        assert (integer_inverse(e) @ e == np.eye(quiver.n, dtype=np.int64)).all()

    @settings(deadline=None)
    @given(quiver=dynkin_quivers())
    def test_classification_ignores_orientation(self, quiver):
        names = [t.name for t in classify_dynkin(quiver)]
        assert [t.name for t in classify_dynkin(quiver.reversed())] == names

    @settings(max_examples=40, deadline=None)
    @given(quiver=dynkin_quivers())
    def test_roots_are_directed(self, quiver):
        roots = positive_roots(quiver).as_array()
        gram = roots @ euler_matrix(quiver) @ roots.T
        both = (gram > 0) & (gram.T > 0)
        np.fill_diagonal(both, False)
        assert not both.any()


# ---------------------------------------------------------------------------
# Subs, quotients and generic hom
# ---------------------------------------------------------------------------


class TestSubQuotLaws:
    @settings(max_examples=40, deadline=None)
    @given(quiver=dynkin_quivers(), data=st.data())
    def test_subs_and_quotients_are_complementary(self, quiver, data):
        alpha = data.draw(st.sampled_from(positive_roots(quiver).roots))
        zero = (0,) * quiver.n
        subs = sub_dim_vectors(quiver, alpha) | {zero}
        quots = quot_dim_vectors(quiver, alpha) | {zero}
        assert subs == {tuple(a - q for a, q in zip(alpha, f)) for f in quots}

    @settings(max_examples=40, deadline=None)
    @given(case=quivers_with_dims(), data=st.data())
    def test_generic_hom_bounds_euler_form(self, case, data):
        quiver, d = case
        alpha = data.draw(st.sampled_from(positive_roots(quiver).roots))
        assert hom_root_to(quiver, alpha, d) >= euler_form(quiver, alpha, d)
        assert hom_root_to(quiver, alpha, alpha) == 1

    @settings(max_examples=40, deadline=None)
    @given(case=quivers_with_dims(), data=st.data())
    def test_generic_hom_subadditive(self, case, data):
        quiver, d = case
        d2 = data.draw(vectors(quiver.n, 0, 3))
        total = tuple(a + b for a, b in zip(d, d2))
        for alpha in positive_roots(quiver):
            assert hom_root_to(quiver, alpha, total) <= hom_root_to(
                quiver, alpha, d
            ) + hom_root_to(quiver, alpha, d2)

    def test_generic_hom_not_monotone_in_d(self):
        # S_1 is the top of U_12 on 1 -> 2, so growing d can lose the map
        quiver = Quiver.from_arrows(2, [(1, 2)])
        assert hom_root_to(quiver, (1, 0), (1, 0)) == 1
        assert hom_root_to(quiver, (1, 0), (1, 1)) == 0


# ---------------------------------------------------------------------------
# Rigid decomposition
# ---------------------------------------------------------------------------


class TestDecompositionLaws:
    @settings(max_examples=60, deadline=None)
    @given(case=quivers_with_dims())
    def test_sum_and_ext_free(self, case):
        quiver, d = case
        check = check_decomposition(quiver, d, rigid_multiplicities(quiver, d))
        assert check.passed
        assert check.support_within_bound

    @settings(max_examples=40, deadline=None)
    @given(case=quivers_with_dims(), k=st.integers(2, 3))
    def test_homogeneous(self, case, k):
        quiver, d = case
        scaled = tuple(k * x for x in d)
        expected = {alpha: k * mult for alpha, mult in rigid_multiplicities(quiver, d)}
        assert rigid_multiplicities(quiver, scaled).as_dict() == expected

    @settings(max_examples=40, deadline=None)
    @given(case=quivers_with_dims())
    def test_generic_hom_matches_summands(self, case):
        quiver, d = case
        m = rigid_multiplicities(quiver, d)
        for alpha in positive_roots(quiver):
            assert hom_root_to(quiver, alpha, d) == generic_hom_from_decomposition(quiver, alpha, m)

    @settings(max_examples=40, deadline=None)
    @given(d=st.lists(st.integers(0, 6), min_size=1, max_size=7))
    def test_equioriented_closed_form(self, d):
        n = len(d)
        quiver = Quiver.from_arrows(n, [(k, k + 1) for k in range(1, n)])
        assert equioriented_multiplicities(n, d).entries == rigid_multiplicities(quiver, d).entries

    @settings(max_examples=30, deadline=None)
    @given(first=quivers_with_dims(max_entry=2), second=quivers_with_dims(max_entry=2))
    def test_additive_over_components(self, first, second):
        (q1, d1), (q2, d2) = first, second
        shift = q1.n
        union = Quiver.from_arrows(
            q1.n + q2.n, list(q1.arrows) + [(a + shift, b + shift) for a, b in q2.arrows]
        )
        pad1, pad2 = (0,) * q1.n, (0,) * q2.n
        expected = {alpha + pad2: mult for alpha, mult in rigid_multiplicities(q1, d1)}
        expected.update({pad1 + alpha: mult for alpha, mult in rigid_multiplicities(q2, d2)})
        assert rigid_multiplicities(union, d1 + d2).as_dict() == expected


class TestRankCriterionLaws:
    @settings(max_examples=40, deadline=None)
    @given(case=quivers_with_dims(TYPE_A, max_entry=3), p=st.sampled_from([2, 3, 7, 32003]))
    def test_constructed_module_passes(self, case, p):
        quiver, d = case
        rep = build_rigid_rep(quiver, rigid_multiplicities(quiver, d), FieldConfig.prime(p))
        assert verify_rank_criterion(quiver, rep, d).passed

    @settings(max_examples=25, deadline=None)
    @given(first=quivers_with_dims(TYPE_A, max_entry=2), data=st.data())
    def test_hom_bilinear_over_summands(self, first, data):
        quiver, d = first
        d2 = data.draw(vectors(quiver.n, 0, 2))
        m, m2 = rigid_multiplicities(quiver, d), rigid_multiplicities(quiver, d2)
        expected = sum(
            a * b * hom_dim(quiver, alpha, beta) for alpha, a in m for beta, b in m2
        )
        field = FieldConfig.prime(32003)
        v, w = build_rigid_rep(quiver, m, field), build_rigid_rep(quiver, m2, field)
        assert hom_space_dim(v, w) == expected

    @settings(max_examples=25, deadline=None)
    @given(case=quivers_with_dims(TYPE_A, max_entry=3))
    def test_rank_tuple_same_over_q_and_fp(self, case):
        quiver, d = case
        m = rigid_multiplicities(quiver, d)
        over_q = rank_tuple_of(build_rigid_rep(quiver, m, FieldConfig.rationals()))
        over_p = rank_tuple_of(build_rigid_rep(quiver, m, FieldConfig.prime(32003)))
        assert over_q.values == over_p.values


# ---------------------------------------------------------------------------
# Exact ranks
# ---------------------------------------------------------------------------


class TestRankLaws:
    @settings(max_examples=80, deadline=None)
    @given(
        shape=st.tuples(st.integers(1, 4), st.integers(1, 4)),
        data=st.data(),
    )
    def test_sign_matrices_same_rank_over_q_and_fp(self, shape, data):
        rows, cols = shape
        entries = data.draw(
            st.lists(st.sampled_from([-1, 0, 1]), min_size=rows * cols, max_size=rows * cols)
        )
        matrix = np.array(entries, dtype=object).reshape(rows, cols)
        assert matrix_rank(matrix, FieldConfig.rationals()) == matrix_rank(
            matrix, FieldConfig.prime(32003)
        )
