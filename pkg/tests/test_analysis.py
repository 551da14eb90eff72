"""Torus inner products, quadrature, Laplacian eigenvalues, symmetry checks."""
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings

from orbitpoly import analysis, lie, orbit_functions as of, weyl
from orbitpoly.exp_ring import exp_sum
from conftest import dominant_weights


class TestTorusInnerProduct:
    def test_c_diagonal_is_orbit_size(self):
        for lam in [(1,), (3,), (1, 0), (2, 2), (1, 0, 2)]:
            s = exp_sum(lam, "C")
            assert analysis.torus_inner_product(s, s) == weyl.orbit(lam).size

    def test_c_off_diagonal_vanishes(self):
        a = exp_sum((1, 0), "C")
        b = exp_sum((0, 1), "C")
        assert analysis.torus_inner_product(a, b) == 0

    def test_s_diagonal_is_group_order(self):
        for lam in [(2,), (1, 1), (1, 2, 1)]:
            s = exp_sum(lam, "S")
            assert analysis.torus_inner_product(s, s) == factorial(len(lam) + 1)

    def test_e_diagonal_counts_even_orbit(self):
        for lam in [(2,), (1, 1), (2, 0)]:
            s = exp_sum(lam, "E")
            assert analysis.torus_inner_product(s, s) == len(weyl.orbit(lam).even_points)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            analysis.torus_inner_product(exp_sum((1,), "C"), exp_sum((1, 0), "C"))

    @given(dominant_weights(max_rank=3, max_coord=3))
    @settings(max_examples=40, deadline=None)
    def test_distinct_orbits_are_orthogonal(self, lam):
        other = tuple(c + 1 for c in lam)
        a, b = exp_sum(lam, "C"), exp_sum(other, "C")
        assert analysis.torus_inner_product(a, b) == 0

    @pytest.mark.parametrize("kind,expected", [
        ("C", "orbit size"), ("S", "3!"), ("E", "even-orbit size"),
    ])
    def test_orthogonality_report(self, kind, expected):
        rep = analysis.orthogonality_report(kind, 2, 2)
        assert rep.passed
        assert rep.max_deviation == 0
        assert rep.expected_diagonal == expected
        assert rep.as_dict()["pairs_tested"] == rep.pairs_tested > 0


class TestQuadrature:
    def test_matches_exact_diagonal(self):
        assert analysis.quadrature_inner_product("C", (1, 0), (1, 0), 8) == pytest.approx(3)
        assert analysis.quadrature_inner_product("C", (1, 0), (0, 1), 8) == pytest.approx(
            0, abs=1e-12
        )
        assert analysis.quadrature_inner_product("S", (2,), (2,), 8) == pytest.approx(2)

    def test_warns_below_nyquist(self):
        with pytest.warns(analysis.AliasingWarning):
            analysis.quadrature_inner_product("C", (3,), (3,), 6)

    def test_undersampling_demonstrably_aliases(self):
        with pytest.warns(analysis.AliasingWarning):
            value = analysis.quadrature_inner_product("C", (3,), (3,), 6)
        assert value.real == pytest.approx(4.0)  # exact value is 2

    def test_nyquist_bound(self):
        a = exp_sum((3,), "C")
        assert analysis.nyquist_points(a, a) == 7

    @given(dominant_weights(max_rank=2, max_coord=3))
    @settings(max_examples=20, deadline=None)
    def test_exact_above_bound(self, lam):
        s = exp_sum(lam, "C")
        n_points = analysis.nyquist_points(s, s)
        got = analysis.quadrature_inner_product("C", lam, lam, n_points)
        assert got == pytest.approx(analysis.torus_inner_product(s, s), abs=1e-9)


class TestHyperplaneFrame:
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    @pytest.mark.parametrize("reverse", [False, True])
    def test_orthonormal_and_in_hyperplane(self, n, reverse):
        frame = analysis.hyperplane_frame(n, reverse=reverse)
        assert frame.shape == (n, n + 1)
        assert np.allclose(frame @ frame.T, np.eye(n), atol=1e-12)
        assert np.allclose(frame @ np.ones(n + 1), 0, atol=1e-12)


class TestLaplacian:
    def test_rank_one_closed_form(self):
        # 2cos(2*pi*x) has squared-norm label 1/2 in this normalization.
        assert float(lie.norm_sq((1,))) == 0.5
        err = analysis.laplacian_eigenvalue_check(
            "C", (1,), x=np.array([0.2, -0.2]), h=1e-3
        )
        assert err is not None and err < 1e-4

    def test_zero_weight_is_harmonic(self):
        assert analysis.laplacian_eigenvalue_check("C", (0, 0)) == 0.0

    def test_a2_s_function(self):
        rng = np.random.default_rng(11)
        err = analysis.laplacian_eigenvalue_check("S", (1, 1), h=1e-3, rng=rng)
        assert err is not None and err < 1e-4

    def test_h_squared_scaling(self):
        x = np.asarray(lie.alpha_to_e_point((0.23, 0.61)))
        e1 = analysis.laplacian_eigenvalue_check("C", (1, 1), x=x, h=1e-3)
        e2 = analysis.laplacian_eigenvalue_check("C", (1, 1), x=x, h=5e-4)
        assert e1 is not None and e2 is not None
        assert 3.0 <= e1 / e2 <= 5.0

    def test_degenerate_points_report_none(self):
        # An impossible magnitude threshold forces every retry to fail.
        err = analysis.laplacian_eigenvalue_check("C", (1,), min_abs=1e9, retries=3)
        assert err is None

    def test_frame_choice_is_irrelevant(self):
        lam = (1, 1)
        x = np.asarray(lie.alpha_to_e_point((0.19, 0.41)))
        out = []
        for rev in (False, True):
            frame = analysis.hyperplane_frame(2, reverse=rev)
            out.append(analysis.fd_laplacian("C", lam, x, 1e-3, frame=frame))
        scale = 4 * np.pi**2 * float(lie.norm_sq(lam)) * abs(of.eval_c(lam, x, basis="e"))
        assert abs(out[0] - out[1]) < 1e-4 * scale

    def test_step_guard(self):
        with pytest.raises(ValueError):
            analysis.laplacian_eigenvalue_check("C", (1,), h=0.5)


class TestSymmetrySuite:
    def test_a2_rho_passes(self):
        rep = analysis.symmetry_suite((1, 1), trials=100)
        assert rep.passed
        assert rep.scale == 6

    def test_a1_sign_flip_directly(self):
        x = 0.3
        assert of.eval_s((3,), (-x,)) == pytest.approx(-of.eval_s((3,), (x,)), abs=1e-12)

    def test_zero_weight_trivial(self):
        rep = analysis.symmetry_suite((0, 0), trials=5)
        assert rep.passed

    def test_report_dict_carries_seed(self):
        rep = analysis.symmetry_suite((1, 1), trials=3, seed=99)
        data = rep.as_dict()
        assert data["seed"] == 99
        assert data["passed"]


class TestSuiteRunners:
    def test_ortho(self):
        report = analysis.run_ortho_suite(rank_bound=2, coord_bound=2)
        assert report.passed

    def test_laplace(self):
        report = analysis.run_laplace_suite(rank_bound=2, points=6)
        assert report.passed

    def test_symmetry(self):
        report = analysis.run_symmetry_suite(rank_bound=2, coord_bound=2, trials=25)
        assert report.passed

    def test_chebyshev(self):
        assert analysis.run_chebyshev_suite().passed

    def test_detforms(self):
        report = analysis.run_detforms_suite(rank_bound=2, samples=25)
        assert report.passed

    def test_run_suite_dispatch(self):
        reports = analysis.run_suite("chebyshev")
        assert len(reports) == 1 and reports[0].passed
        with pytest.raises(ValueError):
            analysis.run_suite("nope")

    def test_reports_render(self):
        report = analysis.run_chebyshev_suite()
        text = report.render_text()
        assert "PASS" in text and "suite chebyshev" in text
        assert report.as_dict()["passed"] is True
