import csv
import json
import logging
from io import StringIO
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ValidationError

from asymptotic.entities import TauAngle
from asymptotic.services import asymptotic_parametrization
from core.entities import PlaneCurveSamples, SpacePoint
from revolute.exceptions import ConfigError, DomainError, ExportError

from .entities import SurfaceMesh
from .schemas import RunConfig

logger = logging.getLogger(__name__)

CSV_HEADER = ["theta", "r", "h"]
AXIS_TOL = 1e-12


def _write(path: str | Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as file:
            file.write(text)
    except OSError as e:
        raise ExportError(f"Cannot write {path}: {e.strerror}") from e


def _read(path: str | Path) -> str:
    try:
        with open(path, encoding="utf-8", newline="") as file:
            return file.read()
    except OSError as e:
        raise ExportError(f"Cannot read {path}: {e.strerror}") from e


def make_profile_csv(curve: PlaneCurveSamples) -> str:
    csv_output = StringIO()
    csv_writer = csv.writer(csv_output, lineterminator="\n")
    csv_writer.writerow(CSV_HEADER)
    for theta, r, h in zip(curve.params, curve.r, curve.h):
        csv_writer.writerow([f"{theta:.17g}", f"{r:.17g}", f"{h:.17g}"])
    return csv_output.getvalue()


def write_profile_csv(curve: PlaneCurveSamples, path: str | Path) -> None:
    _write(path, make_profile_csv(curve))
    logger.info(f"Wrote {len(curve)} samples to {path}")


def read_profile_csv(path: str | Path) -> PlaneCurveSamples:
    csv_reader = csv.reader(StringIO(_read(path)), delimiter=",")
    rows = [row for row in csv_reader if row]
    if not rows or rows[0] != CSV_HEADER:
        raise DomainError(f"{path} does not start with the header theta,r,h")
    try:
        values = np.array([[float(x) for x in row] for row in rows[1:]], dtype=float)
    except ValueError as e:
        raise DomainError(f"{path} holds a non-numeric value: {e}") from e
    values = values.reshape(-1, 3)
    return PlaneCurveSamples(params=values[:, 0], r=values[:, 1], h=values[:, 2])


def revolve(curve: PlaneCurveSamples, segments: int) -> SurfaceMesh:
    """Quad-strip mesh of the profile swept once around the h-axis.

    Vertex (i, j) is sample i turned by 2πj/segments and sits at index
    i·segments + j.
    """
    if segments < 3:
        raise DomainError(f"segments={segments} must be at least 3")
    off_axis = curve.r[np.abs(curve.r) > AXIS_TOL]
    if len(off_axis) and np.any(off_axis > 0) and np.any(off_axis < 0):
        raise DomainError("profile crosses the axis of revolution")

    phi = 2 * np.pi * np.arange(segments) / segments
    x = np.outer(curve.r, np.cos(phi)).ravel()
    y = np.outer(curve.r, np.sin(phi)).ravel()
    z = np.repeat(curve.h, segments)
    vertices = [SpacePoint(*v) for v in zip(x.tolist(), y.tolist(), z.tolist())]

    faces = []
    for i in range(len(curve) - 1):
        for j in range(segments):
            k = (j + 1) % segments
            faces.append(
                (
                    i * segments + j,
                    i * segments + k,
                    (i + 1) * segments + k,
                    (i + 1) * segments + j,
                )
            )
    return SurfaceMesh(vertices, faces)


def grid_faces(rows: int, cols: int) -> list[tuple[int, int, int, int]]:
    return [
        (i * cols + k, i * cols + k + 1, (i + 1) * cols + k + 1, (i + 1) * cols + k)
        for i in range(rows - 1)
        for k in range(cols - 1)
    ]


def write_obj(mesh: SurfaceMesh, path: str | Path) -> None:
    _write(path, mesh.to_obj())
    logger.info(
        f"Wrote {len(mesh.vertices)} vertices and {len(mesh.faces)} faces to {path}"
    )


def read_obj(path: str | Path) -> SurfaceMesh:
    return SurfaceMesh.from_obj(_read(path))


def revolve_to_obj(
    curve: PlaneCurveSamples, segments: int, path: str | Path
) -> SurfaceMesh:
    mesh = revolve(curve, segments)
    write_obj(mesh, path)
    return mesh


def asymptotic_net_obj(
    J: float,
    tau: TauAngle,
    t_range: tuple[float, float],
    s_range: tuple[float, float],
    n_t: int,
    n_s: int,
    path: str | Path,
) -> SurfaceMesh:
    """Grid mesh whose parameter polylines are the two asymptotic families."""
    if n_t < 2 or n_s < 2:
        raise DomainError("the asymptotic net needs n_t, n_s >= 2")
    ts = np.linspace(*t_range, n_t)
    ss = np.linspace(*s_range, n_s)
    vertices = [
        asymptotic_parametrization(J, tau, float(t), float(s)) for t in ts for s in ss
    ]
    mesh = SurfaceMesh(vertices, grid_faces(n_t, n_s))
    write_obj(mesh, path)
    return mesh


def build_config(values: dict[str, Any]) -> RunConfig:
    """Validated RunConfig; domain violations surface as DomainError."""
    try:
        return RunConfig.model_validate(values)
    except ValidationError as e:
        for error in e.errors():
            if isinstance(cause := error.get("ctx", {}).get("error"), DomainError):
                raise cause from e
        first = e.errors()[0]
        key = ".".join(str(part) for part in first["loc"]) or "config"
        raise ConfigError(f"{key}: {first['msg']}") from e


def read_config_values(path: str | Path) -> dict[str, Any]:
    text = _read(path)
    try:
        values = json.loads(text)
    except json.JSONDecodeError as e:
        offset = len(text[: e.pos].encode("utf-8"))
        raise ConfigError(f"{path}: malformed JSON at byte {offset}: {e.msg}") from e
    if not isinstance(values, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return values


def load_config(path: str | Path) -> RunConfig:
    return build_config(read_config_values(path))
