"""Corpus and certification tests.

Exact derivatives carried by the corpus are cross-checked against
central differences, and every analytic convexity claim is re-checked
by the sampling test (which can refute, never prove).
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frachh.functions import (DEFAULT_CORPUS_SEED, ConvexityKind, HolderPair,
                              builtin_function_corpus, builtin_weight_corpus,
                              check_convexity, check_deriv_power_convexity,
                              make_weight, sup_norm, symmetrize)
from frachh.numerics import DomainError
from frachh.oracle import finite_difference_derivative

UNIT = (0.0, 1.0)
SHIFTED = (1.0, 3.0)


class TestFunctionCorpus:
    def test_unit_interval_membership(self):
        fs = builtin_function_corpus(*UNIT)
        labels = [f.label for f in fs]
        assert labels == ["sq", "exp", "exp-neg", "quart", "cosh", "abs",
                          "plin", "quad-rand"]

    def test_positive_interval_gains_log_entries(self):
        labels = {f.label for f in builtin_function_corpus(*SHIFTED)}
        assert {"neg-log", "xlogx"} <= labels
        assert len(labels) == 10

    def test_kinked_entries_carry_no_derivative(self):
        fs = {f.label: f for f in builtin_function_corpus(*UNIT)}
        for label in ("abs", "plin"):
            assert fs[label].deriv is None
            assert fs[label].convexity_kind is ConvexityKind.ANALYTIC_CONVEX
            assert fs[label].certified_convex
            assert not fs[label].admits_deriv_power(2.0)

    def test_xlogx_certification_depends_on_interval(self):
        # |log x + 1| is convex only where log x + 1 keeps one sign
        wide = {f.label: f for f in builtin_function_corpus(*SHIFTED)}
        assert wide["xlogx"].convexity_kind is ConvexityKind.ANALYTIC_CONVEX
        narrow = {f.label: f
                  for f in builtin_function_corpus(0.05, 1.0 / math.e)}
        assert (narrow["xlogx"].convexity_kind
                is ConvexityKind.ANALYTIC_DERIV_CONVEX)

    @pytest.mark.parametrize("interval", [UNIT, SHIFTED])
    def test_exact_derivatives_match_finite_differences(self, interval):
        a, b = interval
        for f in builtin_function_corpus(a, b):
            if f.deriv is None:
                continue
            for i in range(1, 100):
                x = a + (b - a) * i / 100.0
                d = f.deriv(x)
                fd = finite_difference_derivative(f.fn, x, 1e-5)
                assert abs(d - fd) <= 1e-8 * (1.0 + abs(d)), (f.label, x)

    @pytest.mark.parametrize("interval", [UNIT, SHIFTED])
    def test_sampling_cannot_refute_corpus_convexity(self, interval):
        for f in builtin_function_corpus(*interval):
            report = check_convexity(f.fn, f.a, f.b)
            assert report.convex, f.label

    def test_deriv_power_claims_survive_sampling(self):
        for f in builtin_function_corpus(*SHIFTED):
            for q in (1.0, 1.5, 2.0, 4.0):
                if f.admits_deriv_power(q):
                    assert check_deriv_power_convexity(f, q).convex, \
                        (f.label, q)

    def test_seed_determinism(self):
        xs = [0.1, 0.37, 0.62, 0.93]
        one = builtin_function_corpus(*UNIT, seed=7)[-1]
        two = builtin_function_corpus(*UNIT, seed=7)[-1]
        other = builtin_function_corpus(*UNIT, seed=8)[-1]
        assert [one(x) for x in xs] == [two(x) for x in xs]
        assert [one(x) for x in xs] != [other(x) for x in xs]

    def test_interval_validated(self):
        with pytest.raises(DomainError):
            builtin_function_corpus(1.0, 1.0)
        with pytest.raises(DomainError):
            builtin_function_corpus(0.0, math.inf)


class TestWeightCorpus:
    @pytest.mark.parametrize("interval", [UNIT, SHIFTED, (-1.0, 2.0)])
    def test_all_weights_validated(self, interval):
        ws = builtin_weight_corpus(*interval)
        assert [w.label for w in ws] == ["one", "parabolic", "vee", "bump",
                                         "cos-arch", "poly-rand"]
        for w in ws:
            assert w.nonnegative and w.symmetric, w.label
            assert (w.a, w.b) == interval

    def test_weight_values(self):
        ws = {w.label: w for w in builtin_weight_corpus(*UNIT)}
        assert ws["one"](0.3) == 1.0
        assert ws["parabolic"](0.5) == 0.25
        assert ws["vee"](0.5) == 0.0
        assert ws["bump"](0.5) == 1.0
        assert ws["cos-arch"](0.0) == pytest.approx(0.0, abs=1e-15)

    def test_seed_determinism(self):
        xs = [0.2, 0.8]
        one = builtin_weight_corpus(*UNIT, seed=3)[-1]
        two = builtin_weight_corpus(*UNIT, seed=3)[-1]
        other = builtin_weight_corpus(*UNIT, seed=4)[-1]
        assert [one(x) for x in xs] == [two(x) for x in xs]
        assert [one(x) for x in xs] != [other(x) for x in xs]


class TestMakeWeight:
    def test_flags_reflect_reality(self):
        w = make_weight("identity", lambda x: x, 0.0, 1.0)
        assert w.nonnegative and not w.symmetric
        w = make_weight("signed", lambda x: x - 0.5, 0.0, 1.0)
        assert not w.nonnegative and not w.symmetric
        w = make_weight("neg-vee", lambda x: -abs(x - 0.5), 0.0, 1.0)
        assert not w.nonnegative and w.symmetric

    def test_nonfinite_weight_rejected(self):
        bad = lambda x: math.nan if abs(x - 0.5) < 1e-9 else 1.0
        with pytest.raises(DomainError):
            make_weight("bad", bad, 0.0, 1.0)

    def test_interval_validated(self):
        with pytest.raises(DomainError):
            make_weight("w", lambda x: 1.0, 1.0, 0.0)


class TestSymmetrize:
    def test_identity_becomes_constant(self):
        w = symmetrize(lambda x: x, 0.0, 1.0)
        assert w.symmetric
        for x in (0.0, 0.25, 0.7):
            assert w(x) == pytest.approx(0.5, rel=1e-15)

    def test_square_even_part(self):
        w = symmetrize(lambda x: x * x, 0.0, 1.0)
        assert w(0.0) == pytest.approx(0.5)
        assert w(0.3) == pytest.approx(0.5 * (0.09 + 0.49))

    def test_idempotent_on_symmetric_input(self):
        g = builtin_weight_corpus(*UNIT)[1]          # parabolic
        w = symmetrize(g.fn, 0.0, 1.0)
        for x in (0.1, 0.5, 0.85):
            assert w(x) == pytest.approx(g(x), rel=1e-15)

    @given(st.floats(-2.0, 2.0), st.floats(-2.0, 2.0), st.floats(-2.0, 2.0))
    @settings(max_examples=50, deadline=None)
    def test_output_always_flagged_symmetric(self, c0, c1, c2):
        w = symmetrize(lambda x: c0 + c1 * x + c2 * x * x * x, 0.0, 1.0)
        assert w.symmetric


class TestConvexityCheck:
    def test_refutes_concave(self):
        assert not check_convexity(lambda x: -x * x, 0.0, 1.0).convex
        assert not check_convexity(math.sin, 0.0, math.pi).convex

    def test_accepts_affine(self):
        report = check_convexity(lambda x: 3.0 * x - 1.0, 0.0, 1.0)
        assert report.convex
        assert report.samples == 2000

    def test_deterministic_for_seed(self):
        r1 = check_convexity(math.exp, 0.0, 1.0, seed=11)
        r2 = check_convexity(math.exp, 0.0, 1.0, seed=11)
        assert r1 == r2

    def test_sample_count_validated(self):
        with pytest.raises(DomainError):
            check_convexity(math.exp, 0.0, 1.0, samples=0)

    def test_deriv_power_requires_derivative(self):
        f = {f.label: f for f in builtin_function_corpus(*UNIT)}["abs"]
        with pytest.raises(DomainError):
            check_deriv_power_convexity(f, 2.0)

    def test_deriv_power_exponent_validated(self):
        f = builtin_function_corpus(*UNIT)[0]
        with pytest.raises(DomainError):
            check_deriv_power_convexity(f, 0.5)


class TestSupNorm:
    def test_known_maxima(self):
        assert sup_norm(lambda x: 1.0, 0.0, 1.0) == 1.0
        assert sup_norm(lambda x: (x - 0.0) * (1.0 - x), 0.0, 1.0) == \
            pytest.approx(0.25, rel=1e-12)
        assert sup_norm(lambda x: abs(x - 0.5), 0.0, 1.0) == \
            pytest.approx(0.5, rel=1e-12)
        assert sup_norm(math.sin, 0.0, math.pi) == pytest.approx(1.0,
                                                                 rel=1e-12)

    @given(st.floats(-3.0, 3.0))
    @settings(max_examples=40, deadline=None)
    def test_absolute_homogeneity(self, c):
        g = lambda x: math.cos(math.pi * (x - 0.5))
        assert sup_norm(lambda x: c * g(x), 0.0, 1.0) == \
            pytest.approx(abs(c) * sup_norm(g, 0.0, 1.0), rel=1e-12,
                          abs=1e-15)

    def test_dominates_point_values(self):
        for w in builtin_weight_corpus(*SHIFTED):
            s = sup_norm(w.fn, w.a, w.b)
            for x in (1.0, 1.7, 2.0, 2.9, 3.0):
                assert s >= abs(w(x)) - 1e-12

    def test_grid_floor(self):
        with pytest.raises(DomainError):
            sup_norm(lambda x: 1.0, 0.0, 1.0, grid=100)


class TestHolderPair:
    def test_conjugate_accepted(self):
        pair = HolderPair(2.0, 2.0)
        assert (pair.p, pair.q) == (2.0, 2.0)
        pair = HolderPair(4.0, 4.0 / 3.0)
        assert 1.0 / pair.p + 1.0 / pair.q == pytest.approx(1.0, abs=1e-15)

    def test_from_q(self):
        pair = HolderPair.from_q(1.5)
        assert pair.p == pytest.approx(3.0)
        assert pair.q == 1.5

    @pytest.mark.parametrize("p,q", [(1.0, 2.0), (2.0, 3.0), (0.5, -1.0)])
    def test_invalid_rejected(self, p, q):
        with pytest.raises(DomainError):
            HolderPair(p, q)

    def test_from_q_validates(self):
        with pytest.raises(DomainError):
            HolderPair.from_q(1.0)

    @given(st.floats(1.01, 50.0))
    @settings(max_examples=50, deadline=None)
    def test_from_q_always_conjugate(self, q):
        pair = HolderPair.from_q(q)
        assert abs(1.0 / pair.p + 1.0 / pair.q - 1.0) <= 1e-12
