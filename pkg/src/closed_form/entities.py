from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class PowerIntegralBranch(StrEnum):
    EVEN_POSITIVE = "even-positive"
    ODD_POSITIVE_WITH_LOG = "odd-positive-with-log"
    ODD_NEGATIVE = "odd-negative"
    EVEN_NEGATIVE_WITH_THETA = "even-negative-with-theta"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class PowerIntegralResult:
    value: float
    branch: PowerIntegralBranch
