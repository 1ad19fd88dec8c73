"""Explicit families, approximators, and the lifted distance machinery."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from premetric.families import (
    Approximator,
    FiniteFamily,
    check_regularity,
    const_approximator,
    dhat_interval,
    dhat_leq_within,
    dhat_witness,
    is_cauchy_explicit,
)
from premetric.programs import sqrt_program
from premetric.spaces import RATIONAL_LINE, FiniteSpace

from conftest import oracle_sqrt_midpoint

F = Fraction
SCALES_10 = [F(1, 2**k) for k in range(0, 11)]


class TestExplicitFamilies:
    def test_single_singleton(self):
        assert is_cauchy_explicit(FiniteFamily.of(["x"]))

    def test_singleton_plus_pair(self):
        assert is_cauchy_explicit(FiniteFamily.of(["x"], ["x", "y"]))

    def test_disjoint_singletons(self):
        assert not is_cauchy_explicit(FiniteFamily.of(["x"], ["y"]))

    def test_no_singleton(self):
        assert not is_cauchy_explicit(FiniteFamily.of(["x", "y"]))

    def test_empty_member_rejected(self):
        with pytest.raises(ValueError):
            FiniteFamily.of([])


class TestConstApproximator:
    def test_constant_sets(self, line):
        a = const_approximator(line, F(0))
        assert a.at(F(1, 8)) == frozenset([F(0)])

    def test_cross_regularity_trivial(self, line):
        a = const_approximator(line, F(3))
        # leq(x, x, eps + delta) by identity and upward closure
        assert line.leq(F(3), F(3), F(1) + F(1, 2))
        assert check_regularity(a, [F(1), F(1, 2)]).passed

    def test_diameter_at_tiny_scale(self, line):
        a = const_approximator(line, F(1, 7))
        assert check_regularity(a, [F(1, 2**10)]).passed


class TestCheckRegularity:
    def test_const_clean(self, line):
        report = check_regularity(const_approximator(line, F(1)), [F(1), F(1, 2), F(1, 4)])
        assert report.passed

    def test_sqrt_program_clean(self, line):
        report = check_regularity(sqrt_program(2), SCALES_10)
        assert report.passed

    def test_sqrt_midpoints_against_independent_oracle(self):
        # the exact-rational oracle check: |m(eps) - m(delta)| <= eps + delta
        for j in range(0, 11):
            for k in range(0, 11):
                eps, delta = F(1, 2**j), F(1, 2**k)
                m1 = oracle_sqrt_midpoint(2, eps)
                m2 = oracle_sqrt_midpoint(2, delta)
                assert abs(m1 - m2) <= eps + delta

    def test_adversarial_program_flagged(self, line):
        def drift(eps):
            return frozenset([F(0) if eps > F(1, 2) else F(10)])

        bad = Approximator(line, drift, name="drift")
        report = check_regularity(bad, [F(1), F(1, 2), F(1, 4)])
        assert not report.passed
        names = {c.name for c in report.failures()}
        # 10 > 1 + 1/4, so the (1, 1/4) pair must be among the violations
        assert "cross@1,1/4" in names

    def test_empty_scales_rejected(self, line):
        with pytest.raises(ValueError):
            check_regularity(const_approximator(line, F(0)), [])


class TestWitness:
    def test_self_distance_any_q(self, line):
        a = const_approximator(line, F(2, 3))
        assert dhat_witness(a, a, F(0), F(1, 4)) is not None

    def test_unit_distance_witnessed_with_slack(self, line):
        zero = const_approximator(line, F(0))
        one = const_approximator(line, F(1))
        w = dhat_witness(zero, one, F(1), F(1, 4))
        assert w is not None and w.S == frozenset([F(0)])

    def test_failure_when_target_too_small(self, line):
        zero = const_approximator(line, F(0))
        one = const_approximator(line, F(1))
        assert dhat_witness(zero, one, F(1, 2), F(1, 4)) is None

    def test_broken_diameter_raises(self, line):
        wide = Approximator(line, lambda eps: frozenset([F(0), F(1)]), name="wide")
        with pytest.raises(ValueError):
            dhat_witness(wide, wide, F(1), F(1, 4))


class TestDhatInterval:
    def test_self_distance_near_zero(self, line):
        a = const_approximator(line, F(5, 9))
        box = dhat_interval(a, a, F(1, 4))
        assert box.lo == 0 and box.hi <= F(1, 8)

    def test_unit_distance(self, line):
        box = dhat_interval(
            const_approximator(line, F(0)), const_approximator(line, F(1)), F(1, 8)
        )
        assert box.contains(F(1))
        assert box.width <= F(1, 4)

    def test_sqrt2_against_reference(self, line):
        from conftest import SQRT2_REF_HI, SQRT2_REF_LO

        box = dhat_interval(
            sqrt_program(2), const_approximator(line, F(99, 70)), F(1, 2**20)
        )
        assert box.width <= F(1, 2**19)
        assert box.lo <= SQRT2_REF_LO and SQRT2_REF_HI <= box.hi

    def test_symmetry(self, line):
        pairs = [
            (const_approximator(line, F(1, 3)), const_approximator(line, F(2))),
            (sqrt_program(2), const_approximator(line, F(3, 2))),
            (sqrt_program(3), sqrt_program(2)),
        ]
        for f, g in pairs:
            assert dhat_interval(f, g, F(1, 64)) == dhat_interval(g, f, F(1, 64))

    def test_triangle_with_slack(self, line):
        delta = F(1, 32)
        progs = [
            const_approximator(line, F(0)),
            sqrt_program(2),
            const_approximator(line, F(2)),
            sqrt_program(3),
        ]
        for f in progs:
            for g in progs:
                for h in progs:
                    hi_fh = dhat_interval(f, h, delta).hi
                    hi_fg = dhat_interval(f, g, delta).hi
                    hi_gh = dhat_interval(g, h, delta).hi
                    assert hi_fh <= hi_fg + hi_gh + 2 * delta

    def test_different_spaces_rejected(self, line, five_points):
        a = const_approximator(line, F(0))
        b = const_approximator(five_points.oracle(), "a")
        with pytest.raises(ValueError):
            dhat_interval(a, b, F(1, 4))

    @given(st.fractions(max_denominator=100), st.fractions(max_denominator=100))
    def test_soundness_on_constants(self, x, y):
        # constant approximators stabilize immediately: the interval pins the
        # base distance within 2*delta
        delta = F(1, 2**8)
        box = dhat_interval(
            const_approximator(RATIONAL_LINE, x),
            const_approximator(RATIONAL_LINE, y),
            delta,
        )
        true = abs(x - y)
        assert box.contains(true)
        assert box.width <= 2 * delta


class TestDhatLeqWithin:
    def test_yes(self, line):
        v = dhat_leq_within(
            const_approximator(line, F(0)), const_approximator(line, F(1)), F(2), F(1, 8)
        )
        assert v.is_yes

    def test_no(self, line):
        v = dhat_leq_within(
            const_approximator(line, F(0)),
            const_approximator(line, F(1)),
            F(1, 2),
            F(1, 8),
        )
        assert v.is_no

    def test_boundary_query_undecided(self, line):
        # exact bound: hi = 1 + delta/2 > 1, lo < 1, so q = 1 stays open
        v = dhat_leq_within(
            const_approximator(line, F(0)), const_approximator(line, F(1)), F(1), F(1, 8)
        )
        assert v.is_unknown and v.precision == F(1, 8)

    def test_upper_continuity_of_answers(self, line):
        f = const_approximator(line, F(0))
        g = sqrt_program(2)
        delta = F(1, 2**6)
        qs = [F(3, 2), F(2), F(5, 2), F(3)]
        answers = [dhat_leq_within(f, g, q, delta) for q in qs]
        seen_yes = False
        for a in answers:
            if seen_yes:
                assert a.is_yes
            seen_yes = seen_yes or a.is_yes
        assert seen_yes  # sqrt(2) < 3/2


class TestStabilizedSoundness:
    def test_finite_space_pins_exact(self, five_points):
        oracle = five_points.oracle()
        a = const_approximator(oracle, "a")
        b = const_approximator(oracle, "b")
        delta = F(1, 2**6)
        box = dhat_interval(a, b, delta)
        assert box.contains(F(1, 3))
        assert box.width <= 2 * delta
