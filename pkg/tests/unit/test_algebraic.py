import math
from fractions import Fraction
from unittest import TestCase

import numpy as np
from sympy import Rational

from algebraic.entities import LineCoeffs, RationalBiPoly, RationalUniPoly, to_rational
from algebraic.services import (
    evolute_implicit_residual,
    implicit_relation,
    implicit_residual,
    line_intersection_poly,
    parametric_relations,
    real_intersections,
)
from closed_form.services import profile_point, sample_evolute, sample_profile
from core.entities import FamilyParams, PlaneCurveSamples
from revolute.exceptions import DomainError, UnsupportedCaseError


class TestRationalTypes(TestCase):
    def test_to_rational(self) -> None:
        self.assertEqual(to_rational("0.1"), Rational(1, 10))
        self.assertEqual(to_rational(0.1), Rational(1, 10))
        self.assertEqual(to_rational("1/3"), Rational(1, 3))
        self.assertEqual(to_rational(Fraction(2, 7)), Rational(2, 7))
        self.assertEqual(to_rational(-4), Rational(-4))

    def test_to_rational_rejects_garbage(self) -> None:
        with self.assertRaises(DomainError):
            to_rational("abc")
        with self.assertRaises(DomainError):
            to_rational(math.inf)

    def test_uni_poly_strips_leading_zeros(self) -> None:
        poly = RationalUniPoly((1, 2, 0, 0))

        self.assertEqual(poly.degree, 1)
        self.assertEqual(poly.leading_coefficient, 2)
        self.assertEqual(RationalUniPoly(()).degree, -1)
        self.assertAlmostEqual(poly(0.5), 2.0)

    def test_bi_poly_drops_zero_terms(self) -> None:
        poly = RationalBiPoly({(1, 0): 4, (0, 2): -1, (1, 1): 0})

        self.assertEqual(len(poly.terms), 2)
        self.assertEqual(poly.total_degree, 2)
        self.assertAlmostEqual(poly(2.0, 3.0), -1.0)

    def test_degenerate_line(self) -> None:
        with self.assertRaises(DomainError):
            LineCoeffs(0, 0, 1)


class TestLineIntersectionPoly(TestCase):
    def test_parabola_with_vertical_line(self) -> None:
        poly = line_intersection_poly(2, FamilyParams(m=2, c=0, J=1), LineCoeffs(1, 0, 0))

        self.assertEqual(poly.coeffs, (Rational(1), Rational(0), Rational(1)))
        self.assertEqual(poly.degree, 2)

    def test_even_positive_degree(self) -> None:
        poly = line_intersection_poly(2, FamilyParams(m=2, c=1, J=1), LineCoeffs(1, 1, 1))

        self.assertEqual(poly.degree, 6)

    def test_odd_negative_degree(self) -> None:
        poly = line_intersection_poly(
            -3, FamilyParams(m=-3, c=1, J=1), LineCoeffs(1, 1, 1)
        )

        self.assertEqual(poly.degree, 6)
        self.assertEqual(poly.leading_coefficient, 2)

    def test_sphere_degree(self) -> None:
        poly = line_intersection_poly(
            -1, FamilyParams(m=-1, c=0, J=3), LineCoeffs(2, -1, 5)
        )

        self.assertEqual(poly.degree, 2)

    def test_parabola_with_oblique_line(self) -> None:
        poly = line_intersection_poly(2, FamilyParams(m=2, c=0, J=1), LineCoeffs(1, 1, 3))

        self.assertEqual(poly.coeffs, (Rational(-2), Rational(-2), Rational(1)))

    def test_unsupported_cases(self) -> None:
        with self.assertRaises(UnsupportedCaseError):
            line_intersection_poly(3, FamilyParams(m=3, c=0), LineCoeffs(1, 1, 1))
        with self.assertRaises(UnsupportedCaseError):
            line_intersection_poly(-2, FamilyParams(m=-2, c=1), LineCoeffs(1, 1, 1))
        with self.assertRaises(UnsupportedCaseError):
            line_intersection_poly(-1, FamilyParams(m=-1, c=3), LineCoeffs(1, 1, 1))

    def test_mismatched_m(self) -> None:
        with self.assertRaises(DomainError):
            line_intersection_poly(4, FamilyParams(m=2, c=0), LineCoeffs(1, 1, 1))


class TestRealIntersections(TestCase):
    def test_parabola(self) -> None:
        p = FamilyParams(m=2, c=0, J=1)
        thetas = real_intersections(2, p, LineCoeffs(1, 1, 3))

        self.assertEqual(len(thetas), 2)
        self.assertAlmostEqual(thetas[0], math.atan(1 - math.sqrt(3)), places=12)
        self.assertAlmostEqual(thetas[1], math.atan(1 + math.sqrt(3)), places=12)

    def test_odd_negative_mirror(self) -> None:
        p = FamilyParams(m=-3, c=0, J=1)
        thetas = real_intersections(-3, p, LineCoeffs(0, 1, 1))

        self.assertEqual(len(thetas), 2)
        self.assertAlmostEqual(thetas[0] + thetas[1], math.pi, places=10)
        for theta in thetas:
            self.assertAlmostEqual(profile_point(p, theta).h, 1.0, places=9)

    def test_squaring_branch_is_filtered(self) -> None:
        p = FamilyParams(m=2, c=3, J=1)
        line = LineCoeffs(1, 0, 5)
        for theta in real_intersections(2, p, line):
            self.assertAlmostEqual(profile_point(p, theta).r, 5.0, places=8)


class TestImplicitRelations(TestCase):
    def test_parabola(self) -> None:
        poly = implicit_relation(2, FamilyParams(m=2, c=0, J=1))

        self.assertEqual(
            poly.terms,
            {(1, 0): Rational(4), (0, 2): Rational(-1), (0, 0): Rational(-4)},
        )

    def test_reduced_cosine_cube(self) -> None:
        poly = implicit_relation(-3, FamilyParams(m=-3, c=0, J=1))

        self.assertEqual(poly.terms[(2, 2)], Rational(-24))
        self.assertEqual(poly.terms[(4, 0)], Rational(15))
        self.assertEqual(poly.total_degree, 6)

    def test_parabola_residual(self) -> None:
        p = FamilyParams(m=2, c=0, J=1)
        curve = sample_profile(p, -1.2, 1.2, 200)

        self.assertLessEqual(implicit_residual(implicit_relation(2, p), curve), 1e-12)

    def test_sextics_residual(self) -> None:
        for m, c, J, window in [
            (2, 1, 1, (-1.2, 1.2)),
            (2, -3, 0.5, (-1.2, 1.2)),
            (-3, 1, 1, (-3.0, 3.0)),
            (-3, 0, 2, (-3.0, 3.0)),
        ]:
            with self.subTest(m=m, c=c, J=J):
                p = FamilyParams(m=m, c=c, J=J)
                curve = sample_profile(p, *window, 200)
                residual = implicit_residual(implicit_relation(m, p), curve)
                self.assertLessEqual(residual, 1e-12)

    def test_perturbed_curve_is_detected(self) -> None:
        p = FamilyParams(m=2, c=0, J=1)
        curve = sample_profile(p, -1.2, 1.2, 200)
        shifted = PlaneCurveSamples(params=curve.params, r=curve.r, h=curve.h + 0.1)

        self.assertGreater(implicit_residual(implicit_relation(2, p), shifted), 1e-3)

    def test_evolute_residual(self) -> None:
        square = sample_evolute(FamilyParams(m=2, c=0, J=1), -1.2, 1.2, 200)
        cube = sample_evolute(FamilyParams(m=-3, c=0, J=1), -3.0, 3.0, 200)

        self.assertLessEqual(evolute_implicit_residual(2, 1, square), 1e-12)
        self.assertLessEqual(evolute_implicit_residual(-3, 1, cube), 1e-12)

    def test_evolute_relation_rejects_profile(self) -> None:
        profile = sample_profile(FamilyParams(m=2, c=0, J=1), -1.2, 1.2, 200)

        self.assertGreater(evolute_implicit_residual(2, 1, profile), 1e-3)

    def test_unsupported(self) -> None:
        with self.assertRaises(UnsupportedCaseError):
            implicit_relation(4, FamilyParams(m=4, c=0))
        with self.assertRaises(UnsupportedCaseError):
            evolute_implicit_residual(3, 1, sample_profile(FamilyParams(m=3, c=0), 0, 1, 5))
        with self.assertRaises(DomainError):
            implicit_relation(2, FamilyParams(m=2, c=0, K=1))


class TestParametricRelations(TestCase):
    def test_relations_vanish_on_profile(self) -> None:
        for m, c, J, K in [(2, 1, 1, 0), (4, 0, 2, 1), (-3, 1, 1, 0.5), (-1, 0, 2, 0)]:
            p = FamilyParams(m=m, c=c, J=J, K=K)
            r_relation, h_relation = parametric_relations(m, p)
            self.assertEqual(r_relation.variables, ("r", "t"))
            self.assertEqual(h_relation.variables, ("h", "t"))
            for theta in np.linspace(-1.0, 1.0, 9):
                theta = float(theta)
                t = math.tan(theta) if m > 0 else math.sin(theta)
                point = profile_point(p, theta)
                with self.subTest(m=m, theta=theta):
                    self.assertAlmostEqual(r_relation(point.r, t), 0.0, places=9)
                    self.assertAlmostEqual(h_relation(point.h, t), 0.0, places=9)

    def test_unsupported(self) -> None:
        with self.assertRaises(UnsupportedCaseError):
            parametric_relations(-2, FamilyParams(m=-2, c=0))
