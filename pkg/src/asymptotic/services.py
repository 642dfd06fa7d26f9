import logging
import math

import numpy as np

from closed_form.services import curvature_radii_closed, profile_point, valid_window
from core.entities import FamilyParams, SpacePoint
from revolute import settings
from revolute.exceptions import DomainError
from utils.integration import quad, rk4_step

from .entities import ConstantAngleCurve, FrameSample, TauAngle

logger = logging.getLogger(__name__)

# RK4 steps per output sample in constant_angle_curve
SUBSTEPS = 8
SINGULAR_TOL = 1e-10


def tau_from_m(m: float) -> TauAngle:
    if not m > 0:
        raise DomainError(
            f"m={m}: asymptotic curves need m > 0, use constant_angle_curve instead"
        )
    return TauAngle(math.atan(math.sqrt(m)))


def _sech(u: float) -> float:
    decay = math.exp(-abs(u))
    return 2 * decay / (1 + decay * decay)


def frame_curves(tau: TauAngle, t: float) -> FrameSample:
    """Spherical images e1, ê3 and f1 along the asymptotic curve."""
    s, c = math.sin(tau.tau), math.cos(tau.tau)
    u = t * c / s
    tanh, sech = math.tanh(u), _sech(u)

    e1 = np.array(
        [
            -math.cos(t) * s * tanh + math.sin(t) * c,
            -math.sin(t) * s * tanh - math.cos(t) * c,
            s * sech,
        ]
    )
    e3 = np.array([math.cos(t) * sech, math.sin(t) * sech, tanh])
    e2 = np.cross(e3, e1)
    f1 = c * e1 + s * e2
    return FrameSample(e1=SpacePoint(*e1), e3=SpacePoint(*e3), f1=SpacePoint(*f1))


def _check_scale(J: float) -> None:
    if not J > 0:
        raise DomainError(f"J={J} must be positive")


def _radius(J: float, tau: TauAngle, t: float) -> float:
    try:
        return J * math.cosh(t / math.tan(tau.tau)) ** tau.m
    except OverflowError as e:
        raise DomainError(f"radius overflows at t={t} for tau={tau.tau}") from e


def _height(J: float, tau: TauAngle, t: float) -> float:
    cot = 1 / math.tan(tau.tau)
    exponent = tau.m - 1
    try:
        integral = quad(lambda x: math.cosh(x * cot) ** exponent, 0.0, t)
    except OverflowError as e:
        raise DomainError(f"height overflows at t={t} for tau={tau.tau}") from e
    return -J * math.tan(tau.tau) * integral


def asymptotic_point(J: float, tau: TauAngle, t: float) -> SpacePoint:
    """α(t) = (r cos t, r sin t, h), starting at the neck α(0) = (J, 0, 0)."""
    _check_scale(J)
    r = _radius(J, tau, t)
    return SpacePoint(r * math.cos(t), r * math.sin(t), _height(J, tau, t))


def asymptotic_parametrization(
    J: float, tau: TauAngle, t: float, s: float
) -> SpacePoint:
    """Net whose parameter lines are the two families of asymptotic curves."""
    _check_scale(J)
    r = _radius(J, tau, t - s)
    h = _height(J, tau, t - s)
    return SpacePoint(r * math.cos(t + s), r * math.sin(t + s), h)


def asymptotic_reparam(tau: TauAngle, theta: float) -> float:
    """Asymptotic-curve parameter t of the profile point at normal angle θ."""
    if not abs(theta) < math.pi / 2:
        raise DomainError(f"theta={theta} is outside (-pi/2, pi/2)")
    sign = math.copysign(1.0, theta)
    return sign * math.tan(tau.tau) * math.acosh(1 / math.cos(theta))


def asymptotic_theta(tau: TauAngle, t: float) -> float:
    u = t / math.tan(tau.tau)
    return math.copysign(1.0, t) * math.acos(_sech(u))


def stereographic(point: SpacePoint) -> complex:
    """Projection of the unit sphere from (0, 0, 1) onto the equatorial plane."""
    if math.isclose(point.z, 1.0):
        raise DomainError("the projection pole has no image")
    return complex(point.x, point.y) / (1 - point.z)


def constant_angle_curve(
    p: FamilyParams,
    angle: float,
    theta0: float,
    phi0: float,
    arc: float,
    n: int,
) -> ConstantAngleCurve:
    """Integrate the surface curve whose tangent makes `angle` with the parallels.

    The unit tangent is cos(angle)·(parallel direction) + sin(angle)·(meridian
    direction), so dφ/ds = cos(angle)/|r| and dθ/ds = sin(angle)/|ρ1|.
    """
    if not 0 < angle <= math.pi / 2:
        raise DomainError(f"angle={angle} must lie in (0, pi/2]")
    if n < 2 or not arc > 0:
        raise DomainError("need n >= 2 samples over a positive arc length")
    low, high = valid_window(p.m, settings.CLOSED_FORM_DELTA)
    if not low <= theta0 <= high:
        raise DomainError(f"theta0={theta0} is outside the profile window")

    cos_a, sin_a = math.cos(angle), math.sin(angle)

    def derivative(s: float, y: np.ndarray) -> np.ndarray:
        theta = float(y[0])
        if not low <= theta <= high:
            raise DomainError(f"theta={theta} left the profile window")
        r = profile_point(p, theta).r
        rho1 = curvature_radii_closed(p, theta).rho1
        if abs(r) < SINGULAR_TOL or abs(rho1) < SINGULAR_TOL:
            raise DomainError(f"singular surface point at theta={theta}")
        return np.array([sin_a / abs(rho1), cos_a / abs(r)])

    step = arc / (SUBSTEPS * (n - 1))
    state = np.array([theta0, phi0], dtype=float)
    thetas, phis, arcs = [theta0], [phi0], [0.0]
    truncated = False
    for i in range(1, n):
        try:
            for j in range(SUBSTEPS):
                s = ((i - 1) * SUBSTEPS + j) * step
                state = rk4_step(derivative, s, step, state)
        except DomainError as e:
            logger.warning(f"Constant-angle curve truncated after {i} samples: {e}")
            truncated = True
            break
        if not low <= state[0] <= high:
            logger.warning(f"Constant-angle curve left the window after {i} samples")
            truncated = True
            break
        thetas.append(float(state[0]))
        phis.append(float(state[1]))
        arcs.append(i * arc / (n - 1))

    points = []
    for theta, phi in zip(thetas, phis):
        point = profile_point(p, theta)
        x, y = point.r * math.cos(phi), point.r * math.sin(phi)
        points.append(SpacePoint(x, y, point.h))
    return ConstantAngleCurve(
        points=points,
        theta=np.array(thetas),
        phi=np.array(phis),
        arc=np.array(arcs),
        truncated=truncated,
    )
