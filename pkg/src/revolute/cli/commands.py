import logging
import math
from argparse import ArgumentParser
from pathlib import Path
from typing import Any, TextIO

from algebraic.entities import LineCoeffs
from algebraic.services import (
    implicit_relation,
    implicit_residual,
    line_intersection_poly,
    real_intersections,
)
from asymptotic.services import tau_from_m
from closed_form.services import offset_params, sample_evolute, sample_profile
from core.entities import as_integer
from core.services import classify_family
from export_io.schemas import RunConfig
from export_io.services import (
    asymptotic_net_obj,
    revolve_to_obj,
    write_profile_csv,
)
from numeric_verify.services import offset_defect, verify_family
from revolute.exceptions import (
    DomainError,
    UnsupportedCaseError,
    UsageError,
    VerificationError,
)

logger = logging.getLogger(__name__)

# Pointwise distance check for `offsets`, relative to 1 + |d| + max(|r|, |h|)
OFFSET_TOL = 1e-10
IMPLICIT_SAMPLES = 200


def format_value(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    return str(value)


class BaseCommand:
    help = ""
    # Config keys this command reads from flags, the JSON config or defaults
    defaults: dict[str, Any] = {}

    def __init__(self, stdout: TextIO, stderr: TextIO) -> None:
        self.stdout = stdout
        self.stderr = stderr

    def add_arguments(self, parser: ArgumentParser) -> None:
        pass

    def handle(self, config: RunConfig, **options) -> None:
        raise NotImplementedError

    def summary(self, **pairs: Any) -> None:
        line = " ".join(f"{key}={format_value(value)}" for key, value in pairs.items())
        self.stdout.write(f"{line}\n")


class ProfileCommand(BaseCommand):
    help = "Sample the profile curve and write it as CSV"

    def sample(self, config: RunConfig):
        return sample_profile(
            config.family, config.theta_min, config.theta_max, config.samples
        )

    def handle(self, config: RunConfig, **options) -> None:
        curve = self.sample(config)
        if config.out:
            write_profile_csv(curve, config.out)
        self.summary(
            samples=len(curve),
            theta_min=config.theta_min,
            theta_max=config.theta_max,
            out=config.out,
        )


class EvoluteCommand(ProfileCommand):
    help = "Sample the evolute (locus of meridian curvature centers) as CSV"

    def sample(self, config: RunConfig):
        return sample_evolute(
            config.family, config.theta_min, config.theta_max, config.samples
        )


def offset_path(out: str, d: float) -> Path:
    path = Path(out)
    return path.with_name(f"{path.stem}_d{d:g}{path.suffix}")


class OffsetsCommand(BaseCommand):
    help = "Write the normal offsets of the profile, one CSV per distance"

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--d-list",
            required=True,
            help="Comma-separated offset distances, e.g. -1,0.5,2",
        )

    def handle(self, config: RunConfig, d_list: str, **options) -> None:
        try:
            distances = [float(d) for d in d_list.split(",") if d.strip()]
        except ValueError as e:
            raise UsageError(f"--d-list: {e}") from e
        if not distances:
            raise UsageError("--d-list needs at least one distance")

        p = config.family
        args = (config.theta_min, config.theta_max, config.samples)
        base = sample_profile(p, *args)
        written, worst = [], 0.0
        for d in distances:
            shifted = sample_profile(offset_params(p, d), *args)
            report = offset_defect(base, shifted, d)
            if report.relative > OFFSET_TOL:
                raise VerificationError(
                    f"offset d={d} is off by {report.max_abs:.3g} "
                    f"at theta={report.argmax_param}"
                )
            worst = max(worst, report.max_abs)
            if config.out:
                path = offset_path(config.out, d)
                write_profile_csv(shifted, path)
                written.append(str(path))
        logger.info(f"Checked {len(distances)} offsets, worst defect {worst:.3g}")
        self.summary(offsets=len(distances), max_defect=worst, out=written or None)


class SurfaceCommand(BaseCommand):
    help = "Revolve the profile around the axis and write a Wavefront OBJ mesh"

    def handle(self, config: RunConfig, **options) -> None:
        if not config.out:
            raise UsageError("surface needs --out")
        curve = sample_profile(
            config.family, config.theta_min, config.theta_max, config.samples
        )
        mesh = revolve_to_obj(curve, config.segments, config.out)
        self.summary(
            vertices=len(mesh.vertices), faces=len(mesh.faces), out=config.out
        )


class AsymptoticCommand(BaseCommand):
    help = "Write the asymptotic-line net of an (m, 0) surface, m > 0, as OBJ"
    defaults = {"c": 0.0}

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--t-min", type=float, default=-1.0)
        parser.add_argument("--t-max", type=float, default=1.0)
        parser.add_argument("--s-min", type=float, default=-1.0)
        parser.add_argument("--s-max", type=float, default=1.0)
        parser.add_argument("--n-t", type=int, default=32)
        parser.add_argument("--n-s", type=int, default=32)

    def handle(
        self,
        config: RunConfig,
        t_min: float,
        t_max: float,
        s_min: float,
        s_max: float,
        n_t: int,
        n_s: int,
        deg: bool = False,
        **options,
    ) -> None:
        if config.c != 0:
            raise DomainError(f"c={config.c}: the asymptotic net is built for c=0")
        if not config.out:
            raise UsageError("asymptotic needs --out")
        if deg:
            t_min, t_max, s_min, s_max = map(math.radians, (t_min, t_max, s_min, s_max))

        tau = tau_from_m(config.m)
        mesh = asymptotic_net_obj(
            config.J, tau, (t_min, t_max), (s_min, s_max), n_t, n_s, config.out
        )
        self.summary(
            tau=tau.tau,
            vertices=len(mesh.vertices),
            faces=len(mesh.faces),
            out=config.out,
        )


class VerifyCommand(BaseCommand):
    help = "Run the numerical invariant suite on the closed-form profile"

    def handle(self, config: RunConfig, **options) -> None:
        summary = verify_family(
            config.family,
            config.theta_min,
            config.theta_max,
            config.verify_samples,
            config.tol,
        )
        weingarten = summary.get("weingarten").report
        self.summary(
            max_residual=weingarten.max_abs,
            normalization=weingarten.normalization,
            skipped=weingarten.skipped,
            checks=len(summary.checks),
            failed=[check.name for check in summary.failures] or None,
        )
        if not summary.passed:
            names = ", ".join(check.name for check in summary.failures)
            raise VerificationError(f"invariants above tol={config.tol}: {names}")


class ClassifyCommand(BaseCommand):
    help = "Decide whether the profile curve is algebraic"

    def handle(self, config: RunConfig, **options) -> None:
        verdict = classify_family(config.m, config.c, config.J)
        self.summary(
            kind=verdict.kind,
            algebraicity=verdict.algebraicity,
            degree=verdict.degree,
            reason=verdict.reason,
        )


class AlgebraicCommand(BaseCommand):
    help = "Exact line-intersection polynomial of an algebraic profile"

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--A", dest="line_a", default="1")
        parser.add_argument("--B", dest="line_b", default="0")
        parser.add_argument("--C", dest="line_c", default="0")
        parser.add_argument(
            "--implicit",
            action="store_true",
            help="Also report the implicit relation residual (m=2 or m=-3)",
        )

    def handle(
        self,
        config: RunConfig,
        line_a: str,
        line_b: str,
        line_c: str,
        implicit: bool = False,
        **options,
    ) -> None:
        m = as_integer(config.m)
        if m is None:
            raise UnsupportedCaseError(f"m={config.m} is not an integer")
        p = config.family
        line = LineCoeffs(line_a, line_b, line_c)
        poly = line_intersection_poly(m, p, line)
        pairs = {
            "degree": poly.degree,
            "leading": str(poly.leading_coefficient),
            "real_thetas": real_intersections(m, p, line) or None,
        }
        if implicit:
            curve = sample_profile(
                p, config.theta_min, config.theta_max, IMPLICIT_SAMPLES
            )
            pairs["implicit_residual"] = implicit_residual(
                implicit_relation(m, p), curve
            )
        self.summary(**pairs)


COMMANDS: dict[str, type[BaseCommand]] = {
    "profile": ProfileCommand,
    "evolute": EvoluteCommand,
    "offsets": OffsetsCommand,
    "surface": SurfaceCommand,
    "asymptotic": AsymptoticCommand,
    "verify": VerifyCommand,
    "classify": ClassifyCommand,
    "algebraic": AlgebraicCommand,
}
