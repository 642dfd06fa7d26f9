from dataclasses import dataclass, field

from core.entities import SpacePoint
from revolute.exceptions import DomainError


@dataclass(frozen=True, eq=False)
class SurfaceMesh:
    """Polygon mesh; faces hold 0-based vertex indices and become 1-based in OBJ."""

    vertices: list[SpacePoint] = field(default_factory=list)
    faces: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self) -> None:
        n = len(self.vertices)
        for face in self.faces:
            if len(face) not in (3, 4):
                raise DomainError(f"face {face} is neither a triangle nor a quad")
            if len(set(face)) != len(face):
                raise DomainError(f"face {face} repeats a vertex")
            if not all(0 <= i < n for i in face):
                raise DomainError(f"face {face} references a missing vertex")

    def to_obj(self) -> str:
        lines = [f"v {v.x:.17g} {v.y:.17g} {v.z:.17g}" for v in self.vertices]
        lines += ["f " + " ".join(str(i + 1) for i in face) for face in self.faces]
        return "".join(f"{line}\n" for line in lines)

    @classmethod
    def from_obj(cls, text: str) -> "SurfaceMesh":
        """Reads the `v`/`f` subset back, validating 1-based face indices."""
        vertices, faces = [], []
        for number, line in enumerate(text.splitlines(), start=1):
            words = line.split()
            if not words or words[0].startswith("#"):
                continue
            if words[0] == "v" and len(words) == 4:
                vertices.append(SpacePoint(*(float(w) for w in words[1:])))
            elif words[0] == "f":
                indices = tuple(int(w.split("/")[0]) for w in words[1:])
                if any(i < 1 for i in indices):
                    raise DomainError(f"line {number}: OBJ indices start at 1")
                faces.append(tuple(i - 1 for i in indices))
            else:
                raise DomainError(f"line {number}: unsupported record {words[0]!r}")
        return cls(vertices, faces)
