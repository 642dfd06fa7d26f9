import logging
import math
from typing import Sequence

import numpy as np

from core.entities import PlaneCurveSamples, PlanePoint, RadiiPair
from revolute import settings
from revolute.exceptions import DomainError, SingularParameterError
from utils.integration import cumulative_quad, rk4_on_grid

from .entities import Rho2Source, ScalarFunction, SupportFunction

logger = logging.getLogger(__name__)

SINGULAR_TOL = 1e-12


def _step(support: SupportFunction, theta: float) -> float:
    if support.fd_step is not None:
        return support.fd_step
    return settings.FD_STEP * max(1.0, abs(theta))


def _central(
    v: ScalarFunction, theta: float, h: float, weights: tuple[float, ...], scale: float
) -> float:
    """Five-point central stencil Σ w_k·v(θ + (k−2)h) / scale."""
    return sum(w * v(theta + (k - 2) * h) for k, w in enumerate(weights) if w) / scale


def support_derivatives(
    support: SupportFunction, theta: float
) -> tuple[float, float, float]:
    """(v, v̇, v̈) at θ, analytic where available."""
    v = support.v(theta)
    h = _step(support, theta)

    if support.dv is not None:
        dv = support.dv(theta)
    else:
        dv = _central(support.v, theta, h, (1, -8, 0, 8, -1), 12 * h)

    if support.d2v is not None:
        d2v = support.d2v(theta)
    else:
        d2v = _central(support.v, theta, h, (-1, 16, -30, 16, -1), 12 * h**2)

    if not all(math.isfinite(x) for x in (v, dv, d2v)):
        raise DomainError(f"support function is not finite near theta={theta}")
    return v, dv, d2v


def envelope_point(support: SupportFunction, theta: float) -> PlanePoint:
    v, dv, _ = support_derivatives(support, theta)
    sin, cos = math.sin(theta), math.cos(theta)
    return PlanePoint(r=-dv * sin**2, h=v + dv * cos * sin)


def radii_from_support(support: SupportFunction, theta: float) -> RadiiPair:
    cos = math.cos(theta)
    if abs(cos) < SINGULAR_TOL:
        raise SingularParameterError(f"rho2 is undefined at theta={theta}")
    _, dv, d2v = support_derivatives(support, theta)
    sin = math.sin(theta)
    return RadiiPair(rho1=d2v * sin + 2 * dv * cos, rho2=-dv * sin**2 / cos)


def _crosses(a: float, b: float, offset: float) -> bool:
    """True if [a, b] contains a point offset + kπ."""
    lo, hi = min(a, b), max(a, b)
    k = math.ceil((lo - offset) / math.pi)
    return offset + k * math.pi <= hi


def solve_rho2_ode(
    m: float,
    c: float,
    theta0: float,
    rho2_0: float,
    grid: Sequence[float],
    step: float | None = None,
) -> list[float]:
    """RK4 solution of ρ̇2 = ((m+1)ρ2 − c)·tanθ reported on `grid`."""
    if m == 0:
        raise DomainError("m=0 singular: profile is a circle")
    ts = np.asarray(grid, dtype=float)
    if len(ts) == 0:
        return []
    if not math.isclose(ts[0], theta0, abs_tol=1e-12):
        raise DomainError(f"grid must start at theta0={theta0}, got {ts[0]}")
    diffs = np.diff(ts)
    if len(diffs) and not (np.all(diffs > 0) or np.all(diffs < 0)):
        raise DomainError("grid must be strictly monotone")
    if _crosses(ts[0], ts[-1], math.pi / 2):
        raise DomainError(
            f"grid [{ts[0]}, {ts[-1]}] crosses a pole of tan(theta)"
        )

    def derivative(theta: float, y: np.ndarray) -> np.ndarray:
        return ((m + 1) * y - c) * math.tan(theta)

    step = settings.RK4_STEP if step is None else step
    ys = rk4_on_grid(derivative, ts, [rho2_0], max_step=step)
    logger.debug(f"Integrated rho2 ODE for m={m}, c={c} on {len(ts)} nodes")
    return [float(y) for y in ys[:, 0]]


def reconstruct_profile(
    source: Rho2Source, grid: Sequence[float], K: float = 0.0
) -> PlaneCurveSamples:
    """Profile (r, h) from ρ2 alone.

    r = ρ2 cosθ and h = −∫ρ2 cosθ/sin²θ dθ − ρ2 cos²θ/sinθ + K, the integral
    anchored at the first grid node.
    """
    ts = np.asarray(grid, dtype=float)
    if len(ts) == 0:
        raise DomainError("grid is empty")
    if len(ts) > 1 and not np.all(np.diff(ts) > 0):
        raise DomainError("grid must be strictly increasing")
    if _crosses(ts[0], ts[-1], 0.0):
        raise DomainError(f"grid [{ts[0]}, {ts[-1]}] touches sin(theta)=0")

    def integrand(theta: float) -> float:
        return source.rho2(theta) * math.cos(theta) / math.sin(theta) ** 2

    integral = cumulative_quad(integrand, ts)
    rho2 = np.array([source.rho2(float(theta)) for theta in ts])
    r = rho2 * np.cos(ts)
    h = -integral - rho2 * np.cos(ts) ** 2 / np.sin(ts) + K
    if not (np.all(np.isfinite(r)) and np.all(np.isfinite(h))):
        raise DomainError("reconstructed profile is not finite on the grid")
    logger.info(f"Reconstructed profile on [{ts[0]}, {ts[-1]}] ({len(ts)} nodes)")
    return PlaneCurveSamples(params=ts, r=r, h=h)
