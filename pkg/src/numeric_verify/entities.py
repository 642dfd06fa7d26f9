from dataclasses import dataclass, field


@dataclass(frozen=True)
class ResidualReport:
    """Worst sample of a residual sweep.

    `skipped` counts samples left out because a denominator vanished.
    """

    max_abs: float
    argmax_param: float
    n_samples: int
    normalization: float = 1.0
    skipped: int = 0

    def __post_init__(self) -> None:
        if self.max_abs < 0:
            raise ValueError("max_abs must be non-negative")

    @property
    def relative(self) -> float:
        return self.max_abs / self.normalization


@dataclass(frozen=True)
class InvariantCheck:
    name: str
    report: ResidualReport
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.report.relative <= self.tolerance


@dataclass(frozen=True)
class VerificationSummary:
    checks: list[InvariantCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[InvariantCheck]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> InvariantCheck:
        return next(check for check in self.checks if check.name == name)
