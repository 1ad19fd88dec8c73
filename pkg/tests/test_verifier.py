"""The checking engines: axioms, quotient, family distance, isometry, fixture."""

from fractions import Fraction

import pytest

from premetric.completion import embed
from premetric.families import FiniteFamily
from premetric.spaces import RATIONAL_LINE, FiniteSpace, PseudoOracle
from premetric.verifier import (
    default_grid,
    enumerate_finite_families,
    family_pin,
    verify_axioms,
    verify_isometry,
    verify_nofip_fixture,
    verify_quotient,
    verify_thm23,
)

F = Fraction


class TestVerifyAxioms:
    def test_bundled_space_passes(self, five_points):
        report = verify_axioms(
            five_points.oracle(), five_points.labels, default_grid(five_points)
        )
        assert report.passed

    def test_broken_triangle_names_a_triple(self, broken_triangle):
        report = verify_axioms(
            broken_triangle.oracle(),
            broken_triangle.labels,
            default_grid(broken_triangle),
        )
        assert not report.passed
        failed = {c.name: c for c in report.failures()}
        assert "axiom3-triangle" in failed
        w = failed["axiom3-triangle"].witness
        # the counterexample must reproduce: d(x,z) <= p, d(z,y) <= q,
        # d(x,y) > p + q
        d = broken_triangle.entry
        assert d(w["x"], w["z"]) <= w["p"]
        assert d(w["z"], w["y"]) <= w["q"]
        assert d(w["x"], w["y"]) > w["p"] + w["q"]

    def test_broken_symmetry_detected(self):
        m = ((F(0), F(1)), (F(2), F(0)))
        space = FiniteSpace(("a", "b"), m)
        report = verify_axioms(space.oracle(), space.labels, default_grid(space))
        failed = {c.name for c in report.failures()}
        assert "axiom2-symmetry" in failed

    def test_broken_identity_detected(self):
        m = ((F(0), F(0)), (F(0), F(0)))
        space = FiniteSpace(("a", "b"), m)
        report = verify_axioms(space.oracle(), space.labels, default_grid(space))
        failed = {c.name for c in report.failures()}
        assert "axiom1-identity-at-zero" in failed

    def test_rational_line_sample(self, line):
        sample = [F(0), F(1, 2), F(-1, 2), F(1, 3), F(2)]
        grid = [F(k, 8) for k in range(0, 50)]
        report = verify_axioms(line, sample, grid)
        assert report.passed

    def test_deterministic(self, five_points):
        oracle = five_points.oracle()
        grid = default_grid(five_points)
        first = verify_axioms(oracle, five_points.labels, grid)
        second = verify_axioms(oracle, five_points.labels, grid)
        assert first == second


class TestVerifyQuotient:
    def test_squares_pseudo_passes(self, squares_pseudo):
        reps = [F(-2), F(-1), F(1), F(2), F(3)]
        grid = [F(k, 2) for k in range(0, 20)]
        assert verify_quotient(squares_pseudo, reps, grid).passed

    def test_single_point(self, line):
        assert verify_quotient(line, [F(1)], [F(0), F(1)]).passed

    def test_planted_non_transitive_fails(self):
        # u ~ v and v ~ w but u !~ w
        pairs_at_zero = {("u", "v"), ("v", "u"), ("v", "w"), ("w", "v"),
                         ("u", "u"), ("v", "v"), ("w", "w")}

        def leq(x, y, q):
            if (x, y) in pairs_at_zero:
                return True
            return q >= 1

        pseudo = PseudoOracle(
            name="non-transitive", leq=leq, bound=lambda x, y: F(1)
        )
        report = verify_quotient(pseudo, ["u", "v", "w"], [F(0), F(1, 2), F(1)])
        failed = {c.name for c in report.failures()}
        assert "equiv-transitive" in failed


class TestFamilyEnumeration:
    def test_first_families_are_singletons(self, four_points):
        fams = enumerate_finite_families(four_points.labels, limit=10)
        assert all(len(f.sets) == 1 for f in fams[:4])
        assert all(len(next(iter(f.sets))) == 1 for f in fams[:4])

    def test_limit_respected_and_all_valid(self, four_points):
        from premetric.families import is_cauchy_explicit

        fams = enumerate_finite_families(four_points.labels, limit=100)
        assert len(fams) == 100
        assert all(is_cauchy_explicit(f) for f in fams)

    def test_deterministic(self, four_points):
        a = enumerate_finite_families(four_points.labels, limit=50)
        b = enumerate_finite_families(four_points.labels, limit=50)
        assert a == b

    def test_pin_extraction(self):
        fam = FiniteFamily.of(["p"], ["p", "q"])
        assert family_pin(fam) == "p"


class TestVerifyThm23:
    def test_hundred_families_pass_exactly(self, four_points):
        fams = enumerate_finite_families(four_points.labels, limit=100)
        report = verify_thm23(four_points, fams, default_grid(four_points))
        assert report.passed

    def test_singleton_families_reduce_to_base_distance(self, four_points):
        fams = [FiniteFamily.of(["p"]), FiniteFamily.of(["q"])]
        report = verify_thm23(four_points, fams, default_grid(four_points))
        assert report.passed
        assert family_pin(fams[0]) == "p" and family_pin(fams[1]) == "q"

    def test_invalid_family_rejected(self, four_points):
        with pytest.raises(ValueError):
            verify_thm23(
                four_points, [FiniteFamily.of(["p", "q"])], default_grid(four_points)
            )


class TestVerifyIsometry:
    def test_embed_on_finite_space_exact(self, five_points):
        oracle = five_points.oracle()
        labels = five_points.labels
        pairs = [(x, y) for x in labels for y in labels]
        images = [(embed(oracle, x), embed(oracle, y)) for x, y in pairs]
        report = verify_isometry(
            oracle, pairs, images, default_grid(five_points), F(1, 2**10)
        )
        assert report.passed

    def test_embed_on_the_line(self, line):
        sample = [
            (F(0), F(1)),
            (F(1, 3), F(22, 7)),
            (F(-5, 4), F(5, 4)),
            (F(0), F(0)),
        ]
        images = [(embed(line, x), embed(line, y)) for x, y in sample]
        grid = [F(k, 4) for k in range(0, 16)]
        report = verify_isometry(line, sample, images, grid, F(1, 2**12))
        assert report.passed

    def test_doubled_map_fails(self, line):
        sample = [(F(0), F(1)), (F(1, 2), F(2))]
        images = [(embed(line, 2 * x), embed(line, 2 * y)) for x, y in sample]
        grid = [F(k, 4) for k in range(0, 16)]
        report = verify_isometry(line, sample, images, grid, F(1, 2**12))
        assert not report.passed

    def test_mismatched_lengths_rejected(self, line):
        with pytest.raises(ValueError):
            verify_isometry(line, [(F(0), F(1))], [], [F(1)], F(1, 4))


class TestNoFipFixture:
    def test_standard_scales_pass(self):
        scales = [F(1, 2**k) for k in range(0, 11)]
        report = verify_nofip_fixture(scales)
        assert report.passed
        names = {c.name for c in report.checks}
        assert {
            "cauchy-i-intersections",
            "cauchy-ii-small-diameter",
            "fip-empty-triple",
            "diam-refuted-at-q",
            "diam-at-most-2q",
        } <= names

    def test_membership_predicates(self):
        # spot checks of the fixture's defining predicates
        scales = [F(1, 2)]
        report = verify_nofip_fixture(scales)
        assert report.passed

    def test_empty_scales_rejected(self):
        with pytest.raises(ValueError):
            verify_nofip_fixture([])

    def test_json_rendering_stable_fields(self):
        report = verify_nofip_fixture([F(1, 2)])
        import json

        payload = json.loads(report.to_json())
        assert set(payload) == {"checks", "summary"}
        for entry in payload["checks"]:
            assert set(entry) == {"name", "status", "witness"}
