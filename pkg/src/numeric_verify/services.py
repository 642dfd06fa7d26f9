import logging
import math

import numpy as np

from asymptotic.services import (
    asymptotic_point,
    asymptotic_reparam,
    asymptotic_theta,
    tau_from_m,
)
from closed_form.services import (
    curvature_radii_closed,
    offset_params,
    profile_point,
    sample_evolute,
    sample_profile,
)
from core.entities import FamilyParams, PlaneCurveSamples, RadiiPair, SpacePoint
from revolute.exceptions import DomainError, SingularSampleError

from .entities import InvariantCheck, ResidualReport, VerificationSummary

logger = logging.getLogger(__name__)

SINGULAR_TOL = 1e-12
ON_SURFACE_TOL = 1e-6
SIGN_TOL = 1e-6


def _stencil(
    curve: PlaneCurveSamples, index: int
) -> tuple[float, float, float, float]:
    """(ṙ, ḣ, r̈, ḧ) from the 3-point stencil around an interior sample."""
    if not 0 < index < len(curve) - 1:
        raise SingularSampleError(f"index {index} has no neighbor on both sides")
    ts = curve.params
    h1 = ts[index] - ts[index - 1]
    h2 = ts[index + 1] - ts[index]
    w1 = np.array(
        [-h2 / (h1 * (h1 + h2)), (h2 - h1) / (h1 * h2), h1 / (h2 * (h1 + h2))]
    )
    w2 = 2 * np.array([1 / (h1 * (h1 + h2)), -1 / (h1 * h2), 1 / (h2 * (h1 + h2))])
    r = curve.r[index - 1 : index + 2]
    h = curve.h[index - 1 : index + 2]
    return float(w1 @ r), float(w1 @ h), float(w2 @ r), float(w2 @ h)


def fd_curvature_radii(curve: PlaneCurveSamples, index: int) -> RadiiPair:
    """Oriented principal radii of the revolved profile at one sample.

    The curve parameter must be the normal angle θ; both radii carry the
    factor sgn(ḣ cosθ).
    """
    dr, dh, d2r, d2h = _stencil(curve, index)
    speed = math.hypot(dr, dh)
    curl = dr * d2h - d2r * dh
    if abs(dh) < SINGULAR_TOL or abs(curl) < SINGULAR_TOL:
        raise SingularSampleError(
            f"vanishing denominator at theta={curve.params[index]}"
        )
    sign = math.copysign(1.0, dh * math.cos(curve.params[index]))
    return RadiiPair(
        rho1=sign * speed**3 / curl,
        rho2=sign * curve.r[index] * speed / dh,
    )


def weingarten_residual(m: float, c: float, curve: PlaneCurveSamples) -> ResidualReport:
    """Largest |ρ1 + m·ρ2 − c| over interior samples, radii by finite differences."""
    if len(curve) < 5:
        raise DomainError("at least 5 samples are required")

    worst, worst_at, max_rho2 = 0.0, float(curve.params[1]), 0.0
    used = skipped = 0
    for i in range(1, len(curve) - 1):
        try:
            radii = fd_curvature_radii(curve, i)
        except SingularSampleError:
            skipped += 1
            continue
        used += 1
        max_rho2 = max(max_rho2, abs(radii.rho2))
        residual = abs(radii.rho1 + m * radii.rho2 - c)
        if residual > worst:
            worst, worst_at = residual, float(curve.params[i])

    if used == 0:
        raise SingularSampleError("every sample is singular")
    if skipped:
        logger.warning(f"Skipped {skipped} singular samples in Weingarten sweep")
    return ResidualReport(
        max_abs=worst,
        argmax_param=worst_at,
        n_samples=used,
        normalization=1 + abs(c) + max_rho2,
        skipped=skipped,
    )


def evolute_tangent_axis_length(evolute: PlaneCurveSamples) -> list[float]:
    """Signed length L along the evolute tangent to the axis, per interior sample.

    Solves ε¹ + L·ε̇¹/|ε̇| = 0; a tractrix has constant |L|.
    """
    lengths = []
    for i in range(1, len(evolute) - 1):
        dr, dh, _, _ = _stencil(evolute, i)
        speed = math.hypot(dr, dh)
        if speed < SINGULAR_TOL or abs(dr) < SINGULAR_TOL * speed:
            raise SingularSampleError(
                f"evolute tangent is parallel to the axis at {evolute.params[i]}"
            )
        lengths.append(-evolute.r[i] * speed / dr)
    return lengths


def parallel_angle(
    profile: PlaneCurveSamples, space_curve: list[SpacePoint]
) -> list[float]:
    """Angle in [0, π/2] between a surface curve and the parallel through each point.

    `profile[i]` is the profile point the i-th curve point was revolved from;
    its parameter drives the finite-difference tangent.
    """
    if len(profile) != len(space_curve):
        raise DomainError("profile and space curve must have equal length")
    if len(profile) < 3:
        raise DomainError("at least 3 samples are required")

    points = np.array([p.as_array() for p in space_curve])
    radial = np.hypot(points[:, 0], points[:, 1])
    for i, (rho, z) in enumerate(zip(radial, points[:, 2])):
        scale = 1 + abs(profile.r[i]) + abs(profile.h[i])
        off = max(abs(rho - abs(profile.r[i])), abs(z - profile.h[i]))
        if off > ON_SURFACE_TOL * scale:
            raise DomainError(f"sample {i} lies {off:.3g} off the surface")
        if rho < SINGULAR_TOL:
            raise DomainError(f"sample {i} lies on the axis")

    tangents = np.gradient(points, profile.params, axis=0, edge_order=2)
    parallels = np.column_stack(
        [-points[:, 1] / radial, points[:, 0] / radial, np.zeros(len(points))]
    )
    along = np.sum(tangents * parallels, axis=1)
    across = np.linalg.norm(tangents - along[:, None] * parallels, axis=1)
    return [float(a) for a in np.arctan2(across, np.abs(along))]


def normal_curvature(p: FamilyParams, theta: float, dir_angle: float) -> float:
    """Euler's formula with `dir_angle` measured from the parallel."""
    radii = curvature_radii_closed(p, theta)
    if radii.rho1 == 0 or radii.rho2 == 0:
        raise DomainError(f"principal curvature is infinite at theta={theta}")
    return (
        math.cos(dir_angle) ** 2 / radii.rho2 + math.sin(dir_angle) ** 2 / radii.rho1
    )


def tangent_normal_defect(curve: PlaneCurveSamples) -> ResidualReport:
    """Largest |P'·(cosθ, sinθ)|: the tangent must be normal to n(θ).

    Normalized by 1 + max|P'| so that cusps, where P' vanishes, stay usable.
    """
    worst, worst_at, max_speed = 0.0, float(curve.params[0]), 0.0
    for i in range(1, len(curve) - 1):
        dr, dh, _, _ = _stencil(curve, i)
        theta = curve.params[i]
        defect = abs(dr * math.cos(theta) + dh * math.sin(theta))
        max_speed = max(max_speed, math.hypot(dr, dh))
        if defect > worst:
            worst, worst_at = defect, float(theta)
    return ResidualReport(worst, worst_at, max(len(curve) - 2, 0), 1 + max_speed)


def _same_grid(a: PlaneCurveSamples, b: PlaneCurveSamples) -> None:
    if len(a) != len(b) or not np.allclose(a.params, b.params, rtol=0, atol=1e-14):
        raise DomainError("curves must be sampled on the same parameter grid")


def evolute_defect(
    p: FamilyParams, curve: PlaneCurveSamples, evolute: PlaneCurveSamples
) -> ResidualReport:
    """Largest |P + ρ1·n − ε| with ρ1 taken from finite differences on P."""
    _same_grid(curve, evolute)
    worst, worst_at, max_rho1, used, skipped = 0.0, float(curve.params[0]), 0.0, 0, 0
    for i in range(1, len(curve) - 1):
        try:
            rho1 = fd_curvature_radii(curve, i).rho1
        except SingularSampleError:
            skipped += 1
            continue
        theta = curve.params[i]
        dr = curve.r[i] - rho1 * math.cos(theta) - evolute.r[i]
        dh = curve.h[i] - rho1 * math.sin(theta) - evolute.h[i]
        defect = math.hypot(dr, dh)
        used += 1
        max_rho1 = max(max_rho1, abs(rho1))
        if defect > worst:
            worst, worst_at = defect, float(theta)
    logger.debug(f"Evolute defect for {p}: {worst:.3g} at theta={worst_at}")
    return ResidualReport(worst, worst_at, used, 1 + max_rho1, skipped)


def offset_defect(
    base: PlaneCurveSamples, offset: PlaneCurveSamples, d: float
) -> ResidualReport:
    """Largest departure of P_d − P from d·(cosθ, sinθ) in length or direction.

    Normalized by 1 + |d| + max(|r|, |h|) of the base curve, the scale of the
    rounding in P_d − P.
    """
    _same_grid(base, offset)
    dr = offset.r - base.r
    dh = offset.h - base.h
    cos, sin = np.cos(base.params), np.sin(base.params)
    length = np.abs(np.hypot(dr, dh) - abs(d))
    skew = np.abs(dr * sin - dh * cos)
    defect = np.maximum(length, skew)
    i = int(np.argmax(defect)) if len(defect) else 0
    worst = float(defect[i]) if len(defect) else 0.0
    at = float(base.params[i]) if len(defect) else 0.0
    scale = float(np.max(np.maximum(np.abs(base.r), np.abs(base.h)), initial=0.0))
    return ResidualReport(worst, at, len(defect), 1 + abs(d) + scale)


def closed_radii_defect(p: FamilyParams, curve: PlaneCurveSamples) -> ResidualReport:
    """Largest gap between finite-difference and closed-form radii.

    Normalized by 1 + the largest closed-form radius on the curve.
    """
    worst, worst_at, largest, used, skipped = 0.0, float(curve.params[0]), 0.0, 0, 0
    for i in range(1, len(curve) - 1):
        try:
            numeric = fd_curvature_radii(curve, i)
        except SingularSampleError:
            skipped += 1
            continue
        theta = float(curve.params[i])
        expected = curvature_radii_closed(p, theta)
        used += 1
        largest = max(largest, abs(expected.rho1), abs(expected.rho2))
        gap = max(
            abs(numeric.rho1 - expected.rho1), abs(numeric.rho2 - expected.rho2)
        )
        if gap > worst:
            worst, worst_at = gap, theta
    return ResidualReport(worst, worst_at, used, 1 + largest, skipped)


def orientation_defect(p: FamilyParams, curve: PlaneCurveSamples) -> ResidualReport:
    """Share of regular samples where the oriented ρ2 flips sign.

    Samples with |ρ2| below SIGN_TOL·(1 + |c|) carry no sign and are skipped.
    """
    flips, first_at, used, skipped = 0, float(curve.params[0]), 0, 0
    for i in range(1, len(curve) - 1):
        theta = float(curve.params[i])
        expected = curvature_radii_closed(p, theta).rho2
        if abs(expected) <= SIGN_TOL * (1 + abs(p.c)):
            skipped += 1
            continue
        try:
            numeric = fd_curvature_radii(curve, i).rho2
        except SingularSampleError:
            skipped += 1
            continue
        used += 1
        if math.copysign(1.0, numeric) != math.copysign(1.0, expected):
            if not flips:
                first_at = theta
            flips += 1
    if flips:
        logger.warning(f"rho2 changes sign at {flips} samples, first at {first_at}")
    return ResidualReport(flips, first_at, used, max(used, 1), skipped)


def asymptotic_defects(
    p: FamilyParams, theta_min: float, theta_max: float, samples: int
) -> tuple[ResidualReport, ResidualReport]:
    """Normal curvature along τ and parallel angle of the asymptotic curve.

    Only for m > 0, c = 0, J > 0, where the asymptotic curves are known in closed
    form.
    """
    if not (p.m > 0 and p.c == 0 and p.J > 0):
        raise DomainError(f"{p} has no closed-form asymptotic curves")
    tau = tau_from_m(p.m)
    grid = np.linspace(theta_min, theta_max, samples)

    worst, worst_at, scale = 0.0, float(grid[0]), 0.0
    for theta in map(float, grid):
        radii = curvature_radii_closed(p, theta)
        kappa = normal_curvature(p, theta, tau.tau)
        scale = max(
            scale,
            math.cos(tau.tau) ** 2 / abs(radii.rho2)
            + math.sin(tau.tau) ** 2 / abs(radii.rho1),
        )
        if abs(kappa) > worst:
            worst, worst_at = abs(kappa), theta
    curvature = ResidualReport(worst, worst_at, samples, 1 + scale)

    ts = np.linspace(
        asymptotic_reparam(tau, theta_min), asymptotic_reparam(tau, theta_max), samples
    )
    thetas = [asymptotic_theta(tau, float(t)) for t in ts]
    profile = PlaneCurveSamples.from_points(
        list(ts), [profile_point(p, theta) for theta in thetas]
    )
    points = []
    for t in map(float, ts):
        point = asymptotic_point(p.J, tau, t)
        points.append(SpacePoint(point.x, point.y, point.z + p.K))
    deviation = np.abs(np.array(parallel_angle(profile, points)) - tau.tau)
    i = int(np.argmax(deviation))
    angle = ResidualReport(float(deviation[i]), thetas[i], samples)
    return curvature, angle


def verify_family(
    p: FamilyParams,
    theta_min: float,
    theta_max: float,
    samples: int,
    tol: float,
    offset: float = 1.0,
) -> VerificationSummary:
    """Run the numerical invariant suite on the sampled closed-form profile."""
    curve = sample_profile(p, theta_min, theta_max, samples)
    evolute = sample_evolute(p, theta_min, theta_max, samples)
    shifted = sample_profile(offset_params(p, offset), theta_min, theta_max, samples)

    checks = [
        InvariantCheck("weingarten", weingarten_residual(p.m, p.c, curve), tol),
        InvariantCheck("tangent_normal", tangent_normal_defect(curve), tol),
        InvariantCheck("evolute", evolute_defect(p, curve, evolute), tol),
        InvariantCheck("offset", offset_defect(curve, shifted, offset), tol),
        InvariantCheck("radii", closed_radii_defect(p, curve), tol),
        InvariantCheck("orientation", orientation_defect(p, curve), tol),
    ]
    if p.is_log_family and p.c != 0:
        checks.append(InvariantCheck("tractrix", _tractrix_report(p, evolute), tol))
    if p.m > 0 and p.c == 0 and p.J > 0:
        curvature, angle = asymptotic_defects(p, theta_min, theta_max, samples)
        checks.append(InvariantCheck("asymptotic_direction", curvature, tol))
        checks.append(InvariantCheck("parallel_angle", angle, tol))

    summary = VerificationSummary(checks)
    for check in summary.checks:
        logger.info(
            f"{check.name}: {check.report.relative:.3g} "
            f"({'ok' if check.passed else 'FAILED'})"
        )
    return summary


def _tractrix_report(p: FamilyParams, evolute: PlaneCurveSamples) -> ResidualReport:
    worst, worst_at, used, skipped = 0.0, float(evolute.params[0]), 0, 0
    for i in range(1, len(evolute) - 1):
        window = PlaneCurveSamples(
            params=evolute.params[i - 1 : i + 2],
            r=evolute.r[i - 1 : i + 2],
            h=evolute.h[i - 1 : i + 2],
        )
        try:
            (length,) = evolute_tangent_axis_length(window)
        except SingularSampleError:
            skipped += 1
            continue
        used += 1
        deviation = abs(abs(length) - abs(p.c))
        if deviation > worst:
            worst, worst_at = deviation, float(evolute.params[i])
    return ResidualReport(worst, worst_at, used, abs(p.c), skipped)
