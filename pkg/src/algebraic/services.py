import logging
import math

import numpy as np
from sympy import Poly, QQ, Rational, binomial, symbols

from closed_form.services import profile_point
from core.entities import FamilyParams, PlaneCurveSamples, as_integer
from revolute.exceptions import DomainError, UnsupportedCaseError

from .entities import LineCoeffs, RationalBiPoly, RationalUniPoly, to_rational
from .relations import (
    EVOLUTE_RELATIONS,
    PROFILE_RELATIONS,
    REDUCED_PROFILE_RELATIONS,
    RelationTable,
)

logger = logging.getLogger(__name__)

r, h, t = symbols("r h t")


class ExactFamily:
    """Rational view of a family member used by the polynomial constructions."""

    def __init__(self, m: int, p: FamilyParams) -> None:
        if as_integer(p.m) != m:
            raise DomainError(f"m={m} does not match family parameter m={p.m}")
        self.m = m
        self.c = to_rational(p.c)
        self.J = to_rational(p.J)
        self.K = to_rational(p.K)

    @property
    def is_even_positive(self) -> bool:
        return self.m > 0 and self.m % 2 == 0

    @property
    def is_odd_negative(self) -> bool:
        return self.m < 0 and self.m % 2 != 0

    def require_proven(self) -> None:
        if self.is_even_positive:
            return
        if self.is_odd_negative and (self.m != -1 or self.c == 0):
            return
        raise UnsupportedCaseError(
            f"no polynomial construction for m={self.m}, c={self.c}"
        )

    def tan_integral(self):
        """∫sec^m as a polynomial in t = tanθ (even m > 0)."""
        n = (self.m - 2) // 2
        return sum(
            binomial(n, j) * t ** (2 * j + 1) / (2 * j + 1) for j in range(n + 1)
        )

    def sin_integral(self):
        """∫sec^m as a polynomial in t = sinθ (odd m < 0)."""
        n = (-self.m - 1) // 2
        return sum(
            (-1) ** j * binomial(n, j) * t ** (2 * j + 1) / (2 * j + 1)
            for j in range(n + 1)
        )

    @property
    def radius(self) -> Rational:
        """c/(m+1), the radius of the circle the profile carries."""
        if self.m == -1:
            return Rational(0)
        return self.c / (self.m + 1)


def line_intersection_poly(
    m: int, p: FamilyParams, line: LineCoeffs
) -> RationalUniPoly:
    """Polynomial in t whose roots contain every profile/line intersection.

    Even m > 0 substitutes t = tanθ, odd m < 0 substitutes t = sinθ. With
    c ≠ 0 the square root is cleared by squaring, which adds the roots of the
    mirrored branch.
    """
    family = ExactFamily(m, p)
    family.require_proven()
    A, B, C = line.A, line.B, line.C
    J, K, radius = family.J, family.K, family.radius

    if family.is_even_positive:
        height = -m * J * family.tan_integral() + K
        core = A * J * (1 + t**2) ** (m // 2) + B * height - C
        if family.c == 0:
            expr = core
        else:
            expr = (1 + t**2) * core**2 - (radius * (A + B * t)) ** 2
    else:
        mh = -m
        height = mh * J * family.sin_integral() + radius * t + K
        width = J * (1 - t**2) ** ((mh - 1) // 2) + radius
        expr = (B * height - C) ** 2 - A**2 * width**2 * (1 - t**2)

    poly = RationalUniPoly.from_poly(Poly(expr, t, domain=QQ))
    logger.debug(f"Intersection polynomial for m={m} has degree {poly.degree}")
    return poly


def real_intersections(m: int, p: FamilyParams, line: LineCoeffs) -> list[float]:
    """θ values where the profile meets the line, sorted and deduplicated."""
    poly = line_intersection_poly(m, p, line)
    if poly.degree < 1:
        return []

    candidates: list[float] = []
    for root in poly.as_poly().real_roots():
        value = float(root.evalf(30))
        if m > 0:
            candidates.append(math.atan(value))
        elif abs(value) <= 1:
            theta = math.asin(value)
            candidates.append(theta)
            if m < -1:
                mirror = math.pi - theta if theta >= 0 else -math.pi - theta
                candidates.append(mirror)

    A, B, C = float(line.A), float(line.B), float(line.C)
    thetas: list[float] = []
    for theta in sorted(candidates):
        try:
            point = profile_point(p, theta)
        except DomainError:
            continue
        scale = 1 + abs(A * point.r) + abs(B * point.h) + abs(C)
        if abs(A * point.r + B * point.h - C) > 1e-9 * scale:
            continue
        if thetas and abs(theta - thetas[-1]) < 1e-12:
            continue
        thetas.append(theta)
    return thetas


def _substitute(table: RelationTable, c: Rational, J: Rational) -> RationalBiPoly:
    terms: dict[tuple[int, int], Rational] = {}
    for coeff, c_pow, j_pow, r_pow, h_pow in table:
        key = (r_pow, h_pow)
        terms[key] = terms.get(key, Rational(0)) + coeff * c**c_pow * J**j_pow
    return RationalBiPoly(terms)


def implicit_relation(m: int, p: FamilyParams) -> RationalBiPoly:
    """Implicit relation P(r, h) = 0 of the m ∈ {2, −3} profiles with K = 0.

    For c = 0 the reduced relation is returned (the parabola for m = 2).
    """
    if m not in PROFILE_RELATIONS:
        raise UnsupportedCaseError(f"no implicit relation is known for m={m}")
    family = ExactFamily(m, p)
    if family.K != 0:
        raise DomainError("implicit relations hold for K = 0 only")
    if family.c == 0:
        return _substitute(REDUCED_PROFILE_RELATIONS[m], family.c, family.J)
    return _substitute(PROFILE_RELATIONS[m], family.c, family.J)


def evolute_relation(m: int, J: Rational) -> RationalBiPoly:
    if m not in EVOLUTE_RELATIONS:
        raise UnsupportedCaseError(f"no evolute relation is known for m={m}")
    return _substitute(EVOLUTE_RELATIONS[m], Rational(0), to_rational(J))


def implicit_residual(poly: RationalBiPoly, curve: PlaneCurveSamples) -> float:
    """Largest |P(r, h)| / (1 + Σ|term|) over the samples."""
    if len(curve) == 0 or not poly.terms:
        return 0.0
    values = poly.monomials(curve.r, curve.h)
    residual = np.abs(values.sum(axis=0)) / (1 + np.abs(values).sum(axis=0))
    return float(residual.max())


def evolute_implicit_residual(m: int, J: Rational, samples: PlaneCurveSamples) -> float:
    return implicit_residual(evolute_relation(m, J), samples)


def parametric_relations(
    m: int, p: FamilyParams
) -> tuple[RationalBiPoly, RationalBiPoly]:
    """Polynomial relations F(r, t) = 0 and G(h, t) = 0 along the profile."""
    family = ExactFamily(m, p)
    family.require_proven()
    J, K, radius = family.J, family.K, family.radius

    if family.is_even_positive:
        r_part = r - J * (1 + t**2) ** (m // 2)
        h_part = h + m * J * family.tan_integral() - K
        if radius == 0:
            r_expr, h_expr = r_part, h_part
        else:
            r_expr = (1 + t**2) * r_part**2 - radius**2
            h_expr = (1 + t**2) * h_part**2 - radius**2 * t**2
    else:
        mh = -m
        width = J * (1 - t**2) ** ((mh - 1) // 2) + radius
        r_expr = r**2 - (1 - t**2) * width**2
        h_expr = h - mh * J * family.sin_integral() - radius * t - K

    return (
        RationalBiPoly.from_poly(Poly(r_expr, r, t, domain=QQ)),
        RationalBiPoly.from_poly(Poly(h_expr, h, t, domain=QQ)),
    )
