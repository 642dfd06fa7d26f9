import math

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    field_validator,
    model_validator,
)

from closed_form.services import valid_window
from core.entities import FamilyParams
from revolute import settings
from revolute.exceptions import DomainError


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    m: float
    c: float
    J: float = 1.0
    K: float = 0.0
    theta_min: float = -1.2
    theta_max: float = 1.2
    samples: int = Field(default=settings.SAMPLES, ge=8)
    segments: int = Field(default=settings.SEGMENTS, ge=3)
    delta: float = Field(default=settings.DELTA, gt=0, lt=math.pi / 2)
    out: str | None = None
    verify_samples: int = Field(default=settings.VERIFY_SAMPLES, ge=8)
    tol: float = Field(default=1e-4, gt=0)

    @field_validator("m")
    @classmethod
    def check_m(cls, m: float) -> float:
        if m == 0:
            raise DomainError("m=0 singular: profile is a circle")
        return m

    @field_validator("theta_max")
    @classmethod
    def check_order(cls, theta_max: float, info: ValidationInfo) -> float:
        theta_min = info.data.get("theta_min")
        if theta_min is not None and not theta_min < theta_max:
            raise ValueError(f"must exceed theta_min={theta_min}")
        return theta_max

    @model_validator(mode="after")
    def check_window(self) -> "RunConfig":
        low, high = valid_window(self.m, self.delta)
        if self.theta_min < low or self.theta_max > high:
            raise DomainError(
                f"window [{self.theta_min}, {self.theta_max}] reaches a pole, "
                f"stay within [{low:.6g}, {high:.6g}]"
            )
        return self

    @property
    def family(self) -> FamilyParams:
        return FamilyParams(m=self.m, c=self.c, J=self.J, K=self.K)
