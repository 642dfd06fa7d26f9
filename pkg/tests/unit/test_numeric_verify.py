import math
from unittest import TestCase

import numpy as np

from asymptotic.services import asymptotic_point, asymptotic_theta, tau_from_m
from closed_form.services import (
    curvature_radii_closed,
    offset_params,
    profile_point,
    sample_evolute,
    sample_profile,
)
from core.entities import FamilyParams, PlaneCurveSamples, SpacePoint
from numeric_verify.entities import InvariantCheck, ResidualReport
from numeric_verify.services import (
    asymptotic_defects,
    closed_radii_defect,
    evolute_defect,
    evolute_tangent_axis_length,
    fd_curvature_radii,
    normal_curvature,
    offset_defect,
    orientation_defect,
    parallel_angle,
    tangent_normal_defect,
    verify_family,
    weingarten_residual,
)
from revolute.exceptions import DomainError, SingularSampleError


def revolve_at(curve: PlaneCurveSamples, phi: np.ndarray) -> list[SpacePoint]:
    return [
        SpacePoint(r * math.cos(angle), r * math.sin(angle), h)
        for r, h, angle in zip(curve.r, curve.h, phi)
    ]


class TestResidualReport(TestCase):
    def test_relative(self) -> None:
        report = ResidualReport(2.0, 0.1, 10, normalization=4.0)

        self.assertEqual(report.relative, 0.5)
        self.assertTrue(InvariantCheck("x", report, 0.5).passed)
        self.assertFalse(InvariantCheck("x", report, 0.4).passed)

    def test_negative(self) -> None:
        with self.assertRaises(ValueError):
            ResidualReport(-1.0, 0.0, 1)


class TestFdCurvatureRadii(TestCase):
    def test_sphere(self) -> None:
        sphere = FamilyParams(m=-1, c=0, J=3.0)
        curve = sample_profile(sphere, -1.0, 1.0, 4001)

        for index in [1, 1000, 2000, 3999]:
            radii = fd_curvature_radii(curve, index)
            self.assertAlmostEqual(radii.rho1, 3.0, delta=1e-6)
            self.assertAlmostEqual(radii.rho2, 3.0, delta=1e-6)

    def test_matches_closed_form(self) -> None:
        p = FamilyParams(m=2, c=0, J=1.0)
        curve = sample_profile(p, 0.4, 0.6, 201)
        theta = float(curve.params[100])

        radii = fd_curvature_radii(curve, 100)
        expected = curvature_radii_closed(p, theta)

        self.assertAlmostEqual(theta, 0.5, places=12)
        self.assertLess(abs(radii.rho1 / expected.rho1 - 1), 1e-5)
        self.assertLess(abs(radii.rho2 / expected.rho2 - 1), 1e-5)

    def test_circle_member(self) -> None:
        circle = FamilyParams(m=1, c=4, J=0.0)
        curve = sample_profile(circle, -1.0, 1.0, 4001)

        radii = fd_curvature_radii(curve, 2500)

        self.assertAlmostEqual(radii.rho1, 2.0, delta=1e-6)
        self.assertAlmostEqual(radii.rho2, 2.0, delta=1e-6)

    def test_sign_matches_closed_form(self) -> None:
        for m, c in [(2, 3), (-3, 0), (1, -5), (-2, 3)]:
            p = FamilyParams(m=m, c=c, J=1.0)
            curve = sample_profile(p, -0.5, 0.5, 201)
            for index in range(1, 200, 9):
                radii = fd_curvature_radii(curve, index)
                expected = curvature_radii_closed(p, float(curve.params[index]))
                self.assertEqual(np.sign(radii.rho2), np.sign(expected.rho2))

    def test_boundary_index(self) -> None:
        curve = sample_profile(FamilyParams(m=2, c=0), -0.5, 0.5, 11)

        for index in [0, 10]:
            with self.assertRaises(SingularSampleError):
                fd_curvature_radii(curve, index)

    def test_flat_height(self) -> None:
        curve = PlaneCurveSamples(params=[0.0, 1.0, 2.0], r=[0, 1, 2], h=[1, 1, 1])

        with self.assertRaises(SingularSampleError):
            fd_curvature_radii(curve, 1)


class TestWeingartenResidual(TestCase):
    def test_closed_form_profile(self) -> None:
        curve = sample_profile(FamilyParams(m=2, c=3, J=0.5), -1.2, 1.2, 4096)

        report = weingarten_residual(2, 3, curve)

        self.assertLessEqual(report.max_abs, 1e-4 * report.normalization)
        self.assertGreaterEqual(report.argmax_param, -1.2)
        self.assertLessEqual(report.argmax_param, 1.2)

    def test_sphere(self) -> None:
        curve = sample_profile(FamilyParams(m=-1, c=0, J=1.0), -1.0, 1.0, 4001)

        report = weingarten_residual(-1, 0, curve)

        self.assertLessEqual(report.max_abs, 1e-6)
        self.assertEqual(report.n_samples + report.skipped, 3999)

    def test_wrong_relation(self) -> None:
        curve = sample_profile(FamilyParams(m=-1, c=0, J=3.0), -1.0, 1.0, 2001)

        report = weingarten_residual(2, 0, curve)

        self.assertAlmostEqual(report.max_abs, 9.0, delta=1e-3)

    def test_too_few_samples(self) -> None:
        curve = sample_profile(FamilyParams(m=2, c=0), -0.5, 0.5, 4)

        with self.assertRaises(DomainError):
            weingarten_residual(2, 0, curve)


class TestEvoluteTangentAxisLength(TestCase):
    def test_tractrix(self) -> None:
        for c in [-5, 2]:
            evolute = sample_evolute(FamilyParams(m=-1, c=c, J=1.0), 0.1, 1.2, 8001)

            lengths = evolute_tangent_axis_length(evolute)

            self.assertEqual(len(lengths), 7999)
            self.assertLess(max(abs(abs(L) - abs(c)) for L in lengths), 1e-6)

    def test_not_a_tractrix(self) -> None:
        evolute = sample_evolute(FamilyParams(m=2, c=0, J=1.0), 0.1, 1.2, 201)

        lengths = evolute_tangent_axis_length(evolute)

        self.assertGreater(float(np.std(np.abs(lengths))), 1e-2)

    def test_point_evolute(self) -> None:
        evolute = sample_evolute(FamilyParams(m=-1, c=0, J=1.0), 0.1, 1.2, 11)

        with self.assertRaises(SingularSampleError):
            evolute_tangent_axis_length(evolute)


class TestParallelAngle(TestCase):
    def setUp(self) -> None:
        self.curve = sample_profile(FamilyParams(m=2, c=0, J=1.0), -0.8, 0.8, 201)

    def test_meridian(self) -> None:
        points = revolve_at(self.curve, np.full(len(self.curve), 0.7))

        for angle in parallel_angle(self.curve, points):
            self.assertAlmostEqual(angle, math.pi / 2, delta=1e-9)

    def test_parallel_circle(self) -> None:
        phi = np.linspace(0.0, 2.0, 2001)
        point = profile_point(FamilyParams(m=2, c=0, J=1.0), 0.3)
        circle = PlaneCurveSamples(
            params=phi, r=np.full(2001, point.r), h=np.full(2001, point.h)
        )

        for angle in parallel_angle(circle, revolve_at(circle, phi)):
            self.assertLess(angle, 1e-7)

    def test_asymptotic_curve(self) -> None:
        tau = tau_from_m(4)
        p = FamilyParams(m=4, c=0, J=1.0)
        ts = np.linspace(-1.0, 1.0, 2001)
        thetas = [asymptotic_theta(tau, float(t)) for t in ts]
        profile = PlaneCurveSamples.from_points(
            thetas, [profile_point(p, theta) for theta in thetas]
        )
        points = [asymptotic_point(1.0, tau, float(t)) for t in ts]

        for angle in parallel_angle(profile, points):
            self.assertAlmostEqual(angle, math.atan(2), delta=1e-5)

    def test_off_surface(self) -> None:
        points = revolve_at(self.curve, np.zeros(len(self.curve)))
        points[50] = SpacePoint(points[50].x + 1e-3, points[50].y, points[50].z)

        with self.assertRaisesRegex(DomainError, "sample 50"):
            parallel_angle(self.curve, points)

    def test_length_mismatch(self) -> None:
        points = revolve_at(self.curve, np.zeros(len(self.curve)))

        with self.assertRaises(DomainError):
            parallel_angle(self.curve, points[:-1])


class TestNormalCurvature(TestCase):
    def setUp(self) -> None:
        self.params = FamilyParams(m=2, c=3, J=0.5)
        self.theta = 0.7
        self.radii = curvature_radii_closed(self.params, self.theta)

    def test_principal_directions(self) -> None:
        meridian = normal_curvature(self.params, self.theta, math.pi / 2)
        parallel = normal_curvature(self.params, self.theta, 0.0)

        self.assertAlmostEqual(meridian, 1 / self.radii.rho1, places=12)
        self.assertAlmostEqual(parallel, 1 / self.radii.rho2, places=12)

    def test_asymptotic_direction(self) -> None:
        for m in [1, 3, 4]:
            p = FamilyParams(m=m, c=0, J=1.0)
            for theta in [-1.0, 0.0, 0.6]:
                kappa = normal_curvature(p, theta, math.atan(math.sqrt(m)))
                self.assertLess(abs(kappa), 1e-10)

    def test_euler_identity(self) -> None:
        expected = 1 / self.radii.rho1 + 1 / self.radii.rho2
        for beta in np.linspace(0, math.pi, 13):
            beta = float(beta)
            total = normal_curvature(self.params, self.theta, beta)
            total += normal_curvature(self.params, self.theta, beta + math.pi / 2)
            self.assertAlmostEqual(total, expected, delta=1e-10)

    def test_cusp(self) -> None:
        # rho1 = 3 - 2 * (0.5 + 1) vanishes at theta = 0
        with self.assertRaises(DomainError):
            normal_curvature(self.params, 0.0, 0.3)


class TestDefects(TestCase):
    def setUp(self) -> None:
        self.params = FamilyParams(m=2, c=0, J=1.0)
        self.curve = sample_profile(self.params, -1.0, 1.0, 2001)

    def test_tangent_normal(self) -> None:
        report = tangent_normal_defect(self.curve)

        self.assertLess(report.relative, 1e-5)
        self.assertEqual(report.n_samples, 1999)

    def test_tangent_normal_detects_wrong_angle(self) -> None:
        shifted = PlaneCurveSamples(
            params=self.curve.params + 0.1, r=self.curve.r, h=self.curve.h
        )

        self.assertGreater(tangent_normal_defect(shifted).relative, 1e-3)

    def test_evolute(self) -> None:
        evolute = sample_evolute(self.params, -1.0, 1.0, 2001)

        report = evolute_defect(self.params, self.curve, evolute)

        self.assertLess(report.relative, 1e-4)

    def test_evolute_grid_mismatch(self) -> None:
        evolute = sample_evolute(self.params, -1.0, 1.0, 2000)

        with self.assertRaises(DomainError):
            evolute_defect(self.params, self.curve, evolute)

    def test_offset(self) -> None:
        for d in [-1.0, 0.5, 2.0]:
            shifted = sample_profile(offset_params(self.params, d), -1.0, 1.0, 2001)
            report = offset_defect(self.curve, shifted, d)
            self.assertLess(report.relative, 1e-12)

    def test_offset_normalized_by_curve_size(self) -> None:
        shifted = sample_profile(offset_params(self.params, 0.5), -1.0, 1.0, 2001)

        report = offset_defect(self.curve, shifted, 0.5)

        self.assertAlmostEqual(report.normalization, 1.5 + 1 / math.cos(1.0) ** 2)

    def test_offset_large_profile(self) -> None:
        p = FamilyParams(m=2, c=0, J=1e6)
        base = sample_profile(p, -1.2, 1.2, 256)
        shifted = sample_profile(offset_params(p, 0.5), -1.2, 1.2, 256)

        self.assertLess(offset_defect(base, shifted, 0.5).relative, 1e-12)

    def test_offset_wrong_distance(self) -> None:
        shifted = sample_profile(offset_params(self.params, 0.5), -1.0, 1.0, 2001)

        report = offset_defect(self.curve, shifted, 0.7)

        self.assertAlmostEqual(report.max_abs, 0.2, places=10)


class TestVerifyFamily(TestCase):
    def test_passes(self) -> None:
        summary = verify_family(FamilyParams(m=2, c=3, J=0.5), -1.2, 1.2, 4096, 1e-4)

        self.assertTrue(summary.passed)
        self.assertEqual(
            [check.name for check in summary.checks],
            [
                "weingarten",
                "tangent_normal",
                "evolute",
                "offset",
                "radii",
                "orientation",
            ],
        )

    def test_log_family_checks_tractrix(self) -> None:
        summary = verify_family(FamilyParams(m=-1, c=2, J=1.0), 0.1, 1.2, 4096, 1e-4)

        self.assertTrue(summary.passed)
        self.assertLess(summary.get("tractrix").report.relative, 1e-6)

    def test_tight_tolerance_fails(self) -> None:
        summary = verify_family(FamilyParams(m=2, c=3, J=0.5), -1.2, 1.2, 256, 1e-14)

        self.assertFalse(summary.passed)
        self.assertIn("weingarten", [check.name for check in summary.failures])

    def test_radii_match_closed_form(self) -> None:
        summary = verify_family(FamilyParams(m=2, c=3, J=0.5), -1.2, 1.2, 4096, 1e-4)

        self.assertLess(summary.get("radii").report.relative, 1e-5)
        self.assertEqual(summary.get("orientation").report.max_abs, 0)

    def test_asymptotic_checks(self) -> None:
        for m in [1, 2]:
            summary = verify_family(FamilyParams(m=m, c=0, J=1.0), -1.2, 1.2, 4096, 1e-4)
            with self.subTest(m=m):
                self.assertTrue(summary.passed)
                self.assertLess(
                    summary.get("asymptotic_direction").report.relative, 1e-12
                )
                self.assertLess(summary.get("parallel_angle").report.relative, 1e-5)

    def test_asymptotic_checks_need_closed_form(self) -> None:
        for p in [FamilyParams(m=2, c=3, J=1.0), FamilyParams(m=-2, c=0, J=1.0)]:
            names = [check.name for check in verify_family(p, -1.0, 1.0, 256, 1).checks]
            self.assertNotIn("parallel_angle", names)
            with self.assertRaises(DomainError):
                asymptotic_defects(p, -1.0, 1.0, 256)


class TestRadiiDefects(TestCase):
    def test_wrong_family(self) -> None:
        curve = sample_profile(FamilyParams(m=2, c=0, J=1.0), -1.0, 1.0, 2001)

        report = closed_radii_defect(FamilyParams(m=2, c=0, J=1.1), curve)

        self.assertGreater(report.relative, 1e-3)

    def test_flipped_orientation(self) -> None:
        p = FamilyParams(m=2, c=0, J=1.0)
        curve = sample_profile(p, -1.0, 1.0, 201)
        mirrored = PlaneCurveSamples(params=curve.params, r=-curve.r, h=curve.h)

        report = orientation_defect(p, mirrored)

        self.assertEqual(report.relative, 1.0)
        self.assertEqual(report.n_samples, 199)
