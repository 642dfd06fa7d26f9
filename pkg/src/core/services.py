from revolute.exceptions import DomainError

from .entities import Algebraicity, FamilyClass, FamilyKind, as_integer


def classify_family(m: float, c: float, J: float) -> FamilyClass:
    """Algebraicity verdict for the profile curve of the (m, c) family member.

    Only the integer cases with a known answer are decided; everything else is
    reported as unclassified.
    """
    if m == 0:
        raise DomainError("m=0 singular: profile is a circle")

    k = as_integer(m)

    if k == -1:
        if c != 0:
            return FamilyClass(
                kind=FamilyKind.LOG_FAMILY,
                algebraicity=Algebraicity.UNCLASSIFIED,
                reason="log-family",
            )
        if J == 0:
            raise DomainError("m=-1, c=0, J=0 is degenerate: profile is a point")
        return FamilyClass(
            kind=FamilyKind.SPHERE,
            algebraicity=Algebraicity.ALGEBRAIC,
            degree=2,
            reason="sphere",
        )

    if J == 0:
        if c == 0:
            raise DomainError("c=0, J=0 is degenerate: profile is a point")
        # circle of radius c/(m+1)
        return FamilyClass(
            kind=FamilyKind.CIRCLE,
            algebraicity=Algebraicity.ALGEBRAIC,
            degree=2,
            reason="circle",
        )

    if k is None:
        return FamilyClass(
            kind=FamilyKind.SECANT_FAMILY,
            algebraicity=Algebraicity.UNCLASSIFIED,
            reason="non-integer-m",
        )

    if k > 0 and k % 2 == 0:
        return FamilyClass(
            kind=FamilyKind.SECANT_FAMILY,
            algebraicity=Algebraicity.ALGEBRAIC,
            degree=k if c == 0 else 2 * (k + 1),
            reason="even-positive-m",
        )
    if k < 0 and k % 2 != 0:
        return FamilyClass(
            kind=FamilyKind.SECANT_FAMILY,
            algebraicity=Algebraicity.ALGEBRAIC,
            degree=-2 * k,
            reason="odd-negative-m",
        )

    return FamilyClass(
        kind=FamilyKind.SECANT_FAMILY,
        algebraicity=Algebraicity.TRANSCENDENTAL,
        reason="odd-positive-m" if k > 0 else "even-negative-m",
    )
