from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as RationalNumber

import numpy as np
from sympy import Poly, QQ, Rational, Symbol

from revolute.exceptions import DomainError

RationalLike = int | str | float | Fraction | Rational


def to_rational(value: RationalLike) -> Rational:
    """Exact rational from an int, a decimal string, a float or a fraction.

    Floats go through their shortest repr, so 0.1 becomes 1/10 rather than
    its binary expansion.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, RationalNumber):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        if not np.isfinite(value):
            raise DomainError(f"{value} has no rational value")
        return Rational(repr(value))
    try:
        return Rational(str(value).strip())
    except (TypeError, ValueError) as e:
        raise DomainError(f"{value!r} is not an exact decimal or fraction") from e


@dataclass(frozen=True)
class RationalUniPoly:
    """Polynomial in one variable; `coeffs[i]` multiplies t**i."""

    coeffs: tuple[Rational, ...]
    variable: str = "t"

    def __post_init__(self) -> None:
        coeffs = [to_rational(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_poly(cls, poly: Poly) -> "RationalUniPoly":
        (variable,) = poly.gens
        return cls(tuple(reversed(poly.all_coeffs())), str(variable))

    def as_poly(self) -> Poly:
        t = Symbol(self.variable)
        return Poly(list(reversed(self.coeffs)) or [0], t, domain=QQ)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else Rational(0)

    def __call__(self, t: float) -> float:
        coeffs = [float(c) for c in self.coeffs]
        return float(np.polynomial.polynomial.polyval(t, coeffs))


@dataclass(frozen=True)
class RationalBiPoly:
    """Sparse polynomial in two variables, keyed by (power of x, power of y)."""

    terms: dict[tuple[int, int], Rational] = field(default_factory=dict)
    variables: tuple[str, str] = ("r", "h")

    def __post_init__(self) -> None:
        terms = {
            (int(i), int(j)): to_rational(c)
            for (i, j), c in self.terms.items()
            if to_rational(c) != 0
        }
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_poly(cls, poly: Poly) -> "RationalBiPoly":
        x, y = poly.gens
        return cls(dict(poly.terms()), (str(x), str(y)))

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def monomials(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Signed term values, shape (n_terms, n_points)."""
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        return np.array(
            [float(c) * x**i * y**j for (i, j), c in self.terms.items()]
        ).reshape(len(self.terms), *x.shape)

    def __call__(self, x: float, y: float) -> float:
        return float(self.monomials(np.array([x]), np.array([y])).sum())


@dataclass(frozen=True)
class LineCoeffs:
    """The line A·r + B·h = C."""

    A: Rational
    B: Rational
    C: Rational

    def __post_init__(self) -> None:
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.A == 0 and self.B == 0:
            raise DomainError("line needs (A, B) != (0, 0)")
