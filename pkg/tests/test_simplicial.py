from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psskit import (
    QVec,
    VecSet,
    basis_decomposition,
    enumerate_simplices,
    factorization_condition,
    in_rint_positive_span,
    is_simplex,
    reay_partition,
    sxy_classify,
)
from psskit.errors import PreconditionError
from psskit.genlib import (
    AntichainSpec,
    example_x9,
    make_cross,
    make_from_antichain,
    make_simplex,
)
from psskit.ratlin import column_rank

from conftest import vecsets

F = Fraction

SIMPLEX2 = make_simplex(2)
CROSS2 = make_cross(2)

X9_SIMPLICES = [
    (0, 1, 2),
    (0, 1, 3, 4, 7, 8),
    (2, 5, 6),
    (3, 4, 5),
    (6, 7, 8),
]


class TestIsSimplex:
    def test_opposite_pair_scaled(self):
        S = VecSet(1, [[2], [-6]])
        s = is_simplex(S)
        assert s is not None
        assert s.dependency == {0: F(1), 1: F(1, 3)}

    def test_planar_triple(self):
        s = is_simplex(SIMPLEX2)
        assert s is not None
        assert s.dependency == {0: F(1), 1: F(1), 2: F(1)}

    def test_zero_entry_in_kernel_rejected(self):
        s = is_simplex(VecSet(2, [[1, 0], [0, 1], [-1, 0]]))
        assert s is None


class TestEnumerate:
    def test_cross(self):
        found = [s.members for s in enumerate_simplices(CROSS2)]
        assert found == [(0, 1), (2, 3)]

    def test_x9(self):
        found = [s.members for s in enumerate_simplices(example_x9())]
        assert found == X9_SIMPLICES
        # the four named triples are present
        for triple in [(0, 1, 2), (3, 4, 5), (6, 7, 8), (2, 5, 6)]:
            assert triple in found

    def test_pointed_pair_has_none(self):
        assert enumerate_simplices(VecSet(2, [[1, 0], [0, 1]])) == []

    @settings(max_examples=40, deadline=None)
    @given(vecsets(max_dim=3, max_size=6))
    def test_cardinality_is_rank_plus_one(self, X):
        for s in enumerate_simplices(X):
            r = column_rank(X.columns(s.members))
            assert len(s.members) == r + 1 <= X.dim + 1

    @settings(max_examples=30, deadline=None)
    @given(vecsets(max_dim=3, max_size=6))
    def test_member_structure(self, X):
        # removing any member of a simplex leaves an independent set whose
        # positive span strictly surrounds the removed member's negation
        for s in enumerate_simplices(X):
            for z in s.members:
                rest = [i for i in s.members if i != z]
                sub = X.subset(rest)
                assert sub.rank() == len(rest)
                assert in_rint_positive_span(-X[z], sub)


class TestFactorization:
    def test_single_simplex(self):
        assert factorization_condition(SIMPLEX2).ok

    def test_cross_exhaustive(self):
        assert factorization_condition(CROSS2).ok
        assert factorization_condition(CROSS2, spanning_only=True).ok

    def test_x9_fails_with_witness(self):
        report = factorization_condition(example_x9())
        assert not report.ok
        Y = set(report.witness_subset)
        S = set(report.witness_simplex.members)
        X = example_x9()
        r = lambda idx: column_rank(X.columns(sorted(idx)))
        assert r(Y & S) + r(Y | S) != r(Y) + r(S)
        # the spanning-subset variant fails too
        assert not factorization_condition(example_x9(), spanning_only=True).ok


class TestBasisDecomposition:
    def test_single_simplex(self):
        d = basis_decomposition(SIMPLEX2)
        assert d.basis == (0, 1)
        assert d.pairs == ((2, (0, 1)),)

    def test_cross(self):
        d = basis_decomposition(CROSS2)
        assert d.basis == (0, 2)
        assert d.pairs == ((1, (0,)), (3, (2,)))

    def test_x9_rejected(self):
        with pytest.raises(PreconditionError):
            basis_decomposition(example_x9())

    @settings(max_examples=15, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 40))
    def test_generated_bases_decompose(self, d, seed):
        from psskit.genlib import random_positive_basis

        n = seed % d + 1
        X = random_positive_basis(d, n, seed)
        dec = basis_decomposition(X)
        assert len(dec.basis) == d
        assert len(dec.pairs) == len(enumerate_simplices(X))
        for x_i, a_i in dec.pairs:
            assert in_rint_positive_span(-X[x_i], X.subset(a_i))


class TestReay:
    def test_single_simplex(self):
        p = reay_partition(make_simplex(3))
        assert p.parts == ((0, 1, 2, 3),)
        assert p.dimensions == (3,)

    def test_cross(self):
        p = reay_partition(make_cross(3))
        assert [len(part) for part in p.parts] == [2, 2, 2]
        assert p.dimensions == (1, 2, 3)

    def test_shared_support(self):
        X = make_from_antichain(AntichainSpec(3, [{1, 2}, {2, 3}]))
        p = reay_partition(X)
        assert [len(part) for part in p.parts] == [3, 2]
        assert p.dimensions == (2, 3)


class TestSxy:
    def test_negated_member(self):
        rep = sxy_classify(SIMPLEX2, QVec([-1, 0]))
        assert (rep.exists_swap, rep.all_full_span, rep.neg_outside_skeleton) == (
            False,
            False,
            False,
        )

    def test_interior_direction(self):
        rep = sxy_classify(SIMPLEX2, QVec([2, 1]))
        assert (rep.exists_swap, rep.all_full_span, rep.neg_outside_skeleton) == (
            True,
            True,
            True,
        )

    def test_line_simplex(self):
        S = VecSet(1, [[1], [-1]])
        rep = sxy_classify(S, QVec([-2]))
        assert (rep.exists_swap, rep.all_full_span, rep.neg_outside_skeleton) == (
            True,
            True,
            True,
        )

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            sxy_classify(SIMPLEX2, QVec([1, 0]))  # already a member
        with pytest.raises(PreconditionError):
            sxy_classify(VecSet(2, [[1, 0], [0, 1]]), QVec([1, 1]))  # not a simplex
        S3 = make_simplex(3)
        with pytest.raises(PreconditionError):
            sxy_classify(
                VecSet(3, [[1, 0, 0], [-1, 0, 0]]), QVec([0, 1, 0])
            )  # outside the span

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_flags_agree(self, data):
        d = data.draw(st.integers(1, 3))
        coeffs = data.draw(
            st.lists(
                st.fractions(min_value=F(1, 2), max_value=3, max_denominator=3),
                min_size=d,
                max_size=d,
            )
        )
        S = make_simplex(d, coeffs)
        weights = data.draw(
            st.lists(
                st.fractions(min_value=-2, max_value=2, max_denominator=2),
                min_size=d + 1,
                max_size=d + 1,
            )
        )
        y = QVec.zero(d)
        for v, w in zip(S, weights):
            y = y + v.scale(w)
        if y.is_zero() or S.index_of(y) is not None:
            return
        rep = sxy_classify(S, y)
        assert rep.exists_swap == rep.all_full_span == rep.neg_outside_skeleton


class TestInterEquivalence:
    @settings(max_examples=15, deadline=None)
    @given(st.data())
    def test_on_spanning_sets(self, data):
        from psskit.genlib import random_positive_basis
        from psskit.spanset import is_pss, positively_dependent

        d = data.draw(st.integers(1, 3))
        n = data.draw(st.integers(1, d))
        X = random_positive_basis(d, n, data.draw(st.integers(0, 99)))
        if data.draw(st.booleans()):
            # mutate into a positively dependent spanning set
            i = data.draw(st.integers(0, len(X) - 1))
            j = data.draw(st.integers(0, len(X) - 1))
            extra = X[i] + X[j]
            if not extra.is_zero() and X.index_of(extra) is None:
                X = VecSet(X.dim, list(X.vectors) + [extra])
        assert is_pss(X)
        indep = not positively_dependent(X).verdict
        # the conditions chain one way: all-subsets => independent =>
        # spanning-subsets; neither converse holds in general
        full = factorization_condition(X).ok
        spanning = factorization_condition(X, spanning_only=True).ok
        if full:
            assert indep
        if indep:
            assert spanning
            basis_decomposition(X)

    def test_spanning_variant_strictly_weaker(self):
        # a positively dependent spanning set on which the restriction to
        # positively spanning subsets loses the violation: the diagonal
        # appended to the planar cross
        X = VecSet(2, [[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1]])
        from psskit.spanset import positively_dependent

        assert positively_dependent(X).verdict
        assert not factorization_condition(X).ok
        assert factorization_condition(X, spanning_only=True).ok

    def test_all_subsets_variant_strictly_stronger(self):
        # a positive basis with overlapping simplex supports: the spans of
        # Y = {e1, -e1-e2} and S = {e2, e3, -e2-e3} meet in the e2 line
        # although Y and S are disjoint, so the all-subsets condition
        # fails on a positively independent set
        X = VecSet(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, 0], [0, -1, -1]])
        from psskit.spanset import is_positive_basis

        assert is_positive_basis(X)
        report = factorization_condition(X)
        assert not report.ok
        assert factorization_condition(X, spanning_only=True).ok
        basis_decomposition(X)  # the basis split still exists
