import math
from dataclasses import dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__

import numpy as np

from revolute.exceptions import DomainError

# Tolerance for treating a real m as an integer
INTEGER_TOL = 1e-12


def as_integer(m: float) -> int | None:
    nearest = round(m)
    if abs(m - nearest) < INTEGER_TOL:
        return int(nearest)
    return None


@dataclass(frozen=True)
class FamilyParams:
    """One member of the (m, c)-type family: ρ1 + m·ρ2 = c.

    `J` is the integration constant of the ρ2 equation (a scale for m ≠ −1, an
    offset for m = −1) and `K` translates the profile along the axis.
    """

    m: float
    c: float
    J: float = 1.0
    K: float = 0.0

    def __post_init__(self) -> None:
        for name in ("m", "c", "J", "K"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.m == 0:
            raise DomainError("m=0 singular: profile is a circle")

    @property
    def integer_m(self) -> int | None:
        return as_integer(self.m)

    @property
    def is_log_family(self) -> bool:
        return self.integer_m == -1


@dataclass(frozen=True)
class PlanePoint:
    r: float
    h: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r) and math.isfinite(self.h)):
            raise DomainError(f"Non-finite plane point ({self.r}, {self.h})")

    def __iter__(self):
        yield self.r
        yield self.h


@dataclass(frozen=True)
class SpacePoint:
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise DomainError(f"Non-finite space point ({self.x}, {self.y}, {self.z})")

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class RadiiPair:
    rho1: float
    rho2: float


@dataclass(frozen=True, eq=False)
class PlaneCurveSamples:
    """A sampled plane curve (profile or evolute) over a θ grid.

    Coordinates are kept as numpy arrays; `d1`/`d2` hold first and second
    derivatives w.r.t. θ as (n, 2) arrays when the producer knows them.
    """

    params: np.ndarray
    r: np.ndarray
    h: np.ndarray
    d1: np.ndarray | None = None
    d2: np.ndarray | None = None

    def __post_init__(self) -> None:
        for name in ("params", "r", "h"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        n = len(self.params)
        if len(self.r) != n or len(self.h) != n:
            raise DomainError("params, r and h must have equal length")
        if n > 1 and not np.all(np.diff(self.params) > 0):
            raise DomainError("params must be strictly increasing")
        for name in ("d1", "d2"):
            value = getattr(self, name)
            if value is None:
                continue
            value = np.asarray(value, dtype=float)
            if value.shape != (n, 2):
                raise DomainError(f"{name} must have shape ({n}, 2)")
            object.__setattr__(self, name, value)

    def __len__(self) -> int:
        return len(self.params)

    @property
    def points(self) -> list[PlanePoint]:
        return [PlanePoint(float(r), float(h)) for r, h in zip(self.r, self.h)]

    @classmethod
    def from_points(
        cls, params: list[float], points: list[PlanePoint]
    ) -> "PlaneCurveSamples":
        return cls(
            params=np.asarray(params, dtype=float),
            r=np.array([p.r for p in points], dtype=float),
            h=np.array([p.h for p in points], dtype=float),
        )


class FamilyKind(StrEnum):
    CIRCLE = "circle"
    SPHERE = "sphere"
    LOG_FAMILY = "log-family"
    SECANT_FAMILY = "secant-family"


class Algebraicity(StrEnum):
    ALGEBRAIC = "algebraic"
    TRANSCENDENTAL = "transcendental"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class FamilyClass:
    kind: FamilyKind
    algebraicity: Algebraicity
    degree: int | None = None
    reason: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if (self.algebraicity == Algebraicity.ALGEBRAIC) != (self.degree is not None):
            raise ValueError("degree is present iff the family is algebraic")
        if self.degree is not None and self.degree < 1:
            raise ValueError("degree must be at least 1")
