import math
from dataclasses import dataclass

import numpy as np

from core.entities import SpacePoint
from revolute.exceptions import DomainError


@dataclass(frozen=True)
class TauAngle:
    """Angle τ ∈ (0, π/2) with m = tan²τ."""

    tau: float

    def __post_init__(self) -> None:
        if not 0 < self.tau < math.pi / 2:
            raise DomainError(f"tau={self.tau} must lie in (0, pi/2)")

    @property
    def m(self) -> float:
        return math.tan(self.tau) ** 2


@dataclass(frozen=True)
class FrameSample:
    e1: SpacePoint
    e3: SpacePoint
    f1: SpacePoint


@dataclass(frozen=True, eq=False)
class ConstantAngleCurve:
    """Surface curve meeting the parallels at a fixed angle.

    `theta` and `phi` are the surface coordinates of each point and `arc` the
    arc length at which it was sampled. `truncated` is set when integration
    stopped early at the edge of the profile window or at a singular point.
    """

    points: list[SpacePoint]
    theta: np.ndarray
    phi: np.ndarray
    arc: np.ndarray
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.points)
