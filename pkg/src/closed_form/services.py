import dataclasses
import logging
import math
from fractions import Fraction

import numpy as np

from core.entities import (
    FamilyParams,
    PlaneCurveSamples,
    PlanePoint,
    RadiiPair,
    as_integer,
)
from revolute import settings
from revolute.exceptions import DomainError, SingularParameterError
from support_geometry.entities import SupportFunction
from utils.integration import quad

from .entities import PowerIntegralBranch, PowerIntegralResult

logger = logging.getLogger(__name__)

SINGULAR_TOL = 1e-12


def double_factorial(n: int) -> int:
    # (-1)!! = 0!! = 1
    return math.prod(range(n, 0, -2))


def valid_window(m: float, delta: float | None = None) -> tuple[float, float]:
    """Default sampling window for the family with slope `m`."""
    if delta is None:
        delta = settings.DELTA
    k = as_integer(m)
    half = math.pi if k is not None and k < -1 else math.pi / 2
    return -half + delta, half - delta


def _check_theta(m: float, theta: float) -> None:
    if not math.isfinite(theta):
        raise DomainError(f"theta={theta} is not finite")
    k = as_integer(m)
    half = math.pi if k is not None and k < -1 else math.pi / 2
    if abs(theta) >= half:
        raise DomainError(f"theta={theta} is outside the open window (-{half}, {half})")


def _cos_power(theta: float, exponent: float) -> float:
    """cos(θ)**exponent, exact integer power where possible."""
    k = as_integer(exponent)
    cos = math.cos(theta)
    if k is not None:
        return cos**k
    if cos <= 0:
        raise DomainError(f"cos(theta)^{exponent} is not real at theta={theta}")
    return cos**exponent


def _sec_power(theta: float, m: float) -> float:
    return _cos_power(theta, -m)


def _sec_power_tan(theta: float, m: float) -> float:
    # sec^m θ · tan θ written as sin θ · cos^{-m-1} θ
    return math.sin(theta) * _cos_power(theta, -m - 1)


def _log_sec_tan(theta: float) -> float:
    return math.log(1 / math.cos(theta) + math.tan(theta))


def secant_power_integral(m: float, theta: float) -> PowerIntegralResult:
    """Antiderivative of sec^m θ, normalized to vanish at θ = 0."""
    _check_theta(m, theta)
    k = as_integer(m)

    if k is not None and k > 0 and k % 2 == 0:
        n = (k - 2) // 2
        tan = math.tan(theta)
        value = sum(
            math.comb(n, j) * tan ** (2 * j + 1) / (2 * j + 1) for j in range(n + 1)
        )
        return PowerIntegralResult(value, PowerIntegralBranch.EVEN_POSITIVE)

    if k is not None and k > 0:
        # reduction of ∫sec^k down to ∫sec = log(sec + tan)
        tail = Fraction(double_factorial(k - 2), double_factorial(k - 1))
        value = float(tail) * _log_sec_tan(theta)
        for j in range(1, (k - 1) // 2 + 1):
            coeff = Fraction(
                double_factorial(k - 2) * double_factorial(k - 2 * j + 1),
                double_factorial(k - 2 * j) * double_factorial(k - 1) * (k - 2 * j + 1),
            )
            value += float(coeff) * _sec_power_tan(theta, k - 2 * j)
        return PowerIntegralResult(value, PowerIntegralBranch.ODD_POSITIVE_WITH_LOG)

    if k is not None and k < 0 and k % 2 != 0:
        n = (-k - 1) // 2
        sin = math.sin(theta)
        value = sum(
            (-1) ** j * math.comb(n, j) * sin ** (2 * j + 1) / (2 * j + 1)
            for j in range(n + 1)
        )
        return PowerIntegralResult(value, PowerIntegralBranch.ODD_NEGATIVE)

    if k is not None and k < 0:
        mh = -k
        value = theta * math.comb(mh, mh // 2) / 2**mh
        value += sum(
            math.comb(mh, j) * math.sin((mh - 2 * j) * theta) / (mh - 2 * j)
            for j in range(mh // 2)
        ) / 2 ** (mh - 1)
        return PowerIntegralResult(value, PowerIntegralBranch.EVEN_NEGATIVE_WITH_THETA)

    value = quad(lambda x: _sec_power(x, m), 0.0, theta)
    return PowerIntegralResult(value, PowerIntegralBranch.NUMERIC)


def rho2_closed(p: FamilyParams, theta: float) -> float:
    _check_theta(p.m, theta)
    if p.is_log_family:
        return p.c * math.log(math.cos(theta)) + p.J
    return p.J * _sec_power(theta, p.m + 1) + p.c / (p.m + 1)


def curvature_radii_closed(p: FamilyParams, theta: float) -> RadiiPair:
    rho2 = rho2_closed(p, theta)
    return RadiiPair(rho1=p.c - p.m * rho2, rho2=rho2)


def _rho_derivatives(p: FamilyParams, theta: float) -> tuple[float, float]:
    """(ρ̇1, ρ̇2) from ρ̇2 = ((m+1)ρ2 − c)·tanθ."""
    rho2 = rho2_closed(p, theta)
    drho2 = ((p.m + 1) * rho2 - p.c) * math.tan(theta)
    return -p.m * drho2, drho2


def profile_point(p: FamilyParams, theta: float) -> PlanePoint:
    _check_theta(p.m, theta)
    sin, cos = math.sin(theta), math.cos(theta)

    if p.is_log_family:
        log_cos = math.log(cos)
        return PlanePoint(
            r=p.c * cos * log_cos + p.J * cos,
            h=p.c * (sin * log_cos + _log_sec_tan(theta)) + p.J * sin + p.K,
        )

    radius = p.c / (p.m + 1)
    integral = secant_power_integral(p.m, theta).value
    return PlanePoint(
        r=p.J * _sec_power(theta, p.m) + radius * cos,
        h=-p.m * p.J * integral + radius * sin + p.K,
    )


def profile_tangent(p: FamilyParams, theta: float) -> PlanePoint:
    """dP/dθ = ρ1(θ)·(−sinθ, cosθ)."""
    rho1 = curvature_radii_closed(p, theta).rho1
    return PlanePoint(r=-rho1 * math.sin(theta), h=rho1 * math.cos(theta))


def profile_second_derivative(p: FamilyParams, theta: float) -> PlanePoint:
    rho1 = curvature_radii_closed(p, theta).rho1
    drho1, _ = _rho_derivatives(p, theta)
    sin, cos = math.sin(theta), math.cos(theta)
    return PlanePoint(r=-drho1 * sin - rho1 * cos, h=drho1 * cos - rho1 * sin)


def evolute_point(p: FamilyParams, theta: float) -> PlanePoint:
    _check_theta(p.m, theta)

    if p.is_log_family:
        return PlanePoint(
            r=-p.c * math.cos(theta),
            h=-p.c * math.sin(theta) + p.c * _log_sec_tan(theta) + p.K,
        )

    integral = secant_power_integral(p.m, theta).value
    return PlanePoint(
        r=(p.m + 1) * p.J * _sec_power(theta, p.m),
        h=p.m * p.J * (_sec_power_tan(theta, p.m) - integral) + p.K,
    )


def offset_params(p: FamilyParams, d: float) -> FamilyParams:
    """Member whose profile is the normal offset of `p` by `d` along (cosθ, sinθ)."""
    if p.is_log_family:
        return dataclasses.replace(p, J=p.J + d)
    return dataclasses.replace(p, c=p.c + (p.m + 1) * d)


def support_value(p: FamilyParams, theta: float) -> float:
    """Axis height v(θ) of the support line of angle θ."""
    sin, cos = math.sin(theta), math.cos(theta)
    if abs(sin) < SINGULAR_TOL or abs(cos) < SINGULAR_TOL:
        raise SingularParameterError(f"support function is undefined at theta={theta}")
    point = profile_point(p, theta)
    return point.h + rho2_closed(p, theta) * cos**2 / sin


def family_support(p: FamilyParams) -> SupportFunction:
    def dv(theta: float) -> float:
        return -rho2_closed(p, theta) * math.cos(theta) / math.sin(theta) ** 2

    def d2v(theta: float) -> float:
        radii = curvature_radii_closed(p, theta)
        sin, cos = math.sin(theta), math.cos(theta)
        return radii.rho1 / sin + 2 * radii.rho2 * cos**2 / sin**3

    return SupportFunction(v=lambda theta: support_value(p, theta), dv=dv, d2v=d2v)


def _grid(theta_min: float, theta_max: float, n: int) -> np.ndarray:
    if n < 1:
        raise DomainError("at least one sample is required")
    if n > 1 and not theta_min < theta_max:
        raise DomainError(f"empty window [{theta_min}, {theta_max}]")
    return np.linspace(theta_min, theta_max, n)


def sample_profile(
    p: FamilyParams,
    theta_min: float,
    theta_max: float,
    n: int,
    with_derivatives: bool = False,
) -> PlaneCurveSamples:
    grid = _grid(theta_min, theta_max, n)
    points = [profile_point(p, float(theta)) for theta in grid]
    curve = PlaneCurveSamples.from_points(list(grid), points)
    if not with_derivatives:
        return curve
    d1 = [tuple(profile_tangent(p, float(theta))) for theta in grid]
    d2 = [tuple(profile_second_derivative(p, float(theta))) for theta in grid]
    return dataclasses.replace(curve, d1=np.array(d1), d2=np.array(d2))


def sample_evolute(
    p: FamilyParams, theta_min: float, theta_max: float, n: int
) -> PlaneCurveSamples:
    grid = _grid(theta_min, theta_max, n)
    points = [evolute_point(p, float(theta)) for theta in grid]
    logger.debug(f"Sampled evolute of {p} on [{theta_min}, {theta_max}] ({n} samples)")
    return PlaneCurveSamples.from_points(list(grid), points)
