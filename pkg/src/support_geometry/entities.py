from dataclasses import dataclass
from typing import Callable

ScalarFunction = Callable[[float], float]


@dataclass(frozen=True)
class SupportFunction:
    """Lines through (0, v(θ)) at angle θ; their envelope is the profile.

    Missing derivatives are replaced by five-point central differences with step
    `fd_step` (or the configured default scaled by max(1, |θ|)).
    """

    v: ScalarFunction
    dv: ScalarFunction | None = None
    d2v: ScalarFunction | None = None
    fd_step: float | None = None


@dataclass(frozen=True)
class Rho2Source:
    rho2: ScalarFunction
