"""Fixed-step Runge–Kutta integration and cumulative adaptive quadrature."""

import logging
import math
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from revolute import settings

logger = logging.getLogger(__name__)

Derivative = Callable[[float, np.ndarray], np.ndarray]


def rk4_step(f: Derivative, t0: float, h: float, y0: np.ndarray) -> np.ndarray:
    k1 = f(t0, y0)
    k2 = f(t0 + h / 2, y0 + h / 2 * k1)
    k3 = f(t0 + h / 2, y0 + h / 2 * k2)
    k4 = f(t0 + h, y0 + h * k3)
    return y0 + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def rk4_on_grid(
    f: Derivative,
    grid: Sequence[float],
    y0: Sequence[float],
    max_step: float | None = None,
) -> np.ndarray:
    """Classical RK4 reporting the state at every grid node.

    Each grid interval is split into equal substeps no longer than `max_step`
    (one step per interval when it is None). Returns an array of shape
    (len(grid), len(y0)); row 0 is `y0`.
    """
    ts = np.asarray(grid, dtype=float)
    ys = np.empty((len(ts), len(y0)))
    ys[0] = y0
    for i in range(len(ts) - 1):
        span = ts[i + 1] - ts[i]
        substeps = 1
        if max_step is not None:
            substeps = max(1, math.ceil(abs(span) / max_step - 1e-9))
        h = span / substeps
        y = ys[i]
        for j in range(substeps):
            y = rk4_step(f, ts[i] + j * h, h, y)
        ys[i + 1] = y
    return ys


def quad(
    f: Callable[[float], float], a: float, b: float, tol: float | None = None
) -> float:
    if a == b:
        return 0.0
    epsabs = settings.QUAD_TOL if tol is None else tol
    value, error = integrate.quad(f, a, b, epsabs=epsabs, epsrel=1e-12, limit=200)
    if error > 10 * max(epsabs, 1e-12 * abs(value)):
        logger.warning(f"Quadrature on [{a}, {b}] reports error estimate {error:.3g}")
    return value


def cumulative_quad(
    f: Callable[[float], float], grid: Sequence[float], tol: float | None = None
) -> np.ndarray:
    """∫ f from grid[0] to each grid node, accumulated interval by interval."""
    ts = np.asarray(grid, dtype=float)
    pieces = [quad(f, ts[i], ts[i + 1], tol) for i in range(len(ts) - 1)]
    return np.concatenate(([0.0], np.cumsum(pieces)))
