"""Axis-aligned cuboid geometry and the scene/layout data model.

World frame: x points east, y points north, z points up; lengths are in
meters. Object positions are the min corner of the world-frame cuboid, so
extents and bounds checks have closed forms. Scene bounds start at the
origin by convention.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional


class SupportType(Enum):
    STANDING = "standing"
    WALL_MOUNTED = "wall_mounted"
    FLOATING = "floating"


class Orientation(Enum):
    NORTH = "north"
    EAST = "east"
    SOUTH = "south"
    WEST = "west"

    def rotated(self, quarter_turns: int) -> "Orientation":
        """Rotate clockwise (compass order N -> E -> S -> W) by 90-degree steps."""
        order = (Orientation.NORTH, Orientation.EAST, Orientation.SOUTH, Orientation.WEST)
        return order[(order.index(self) + quarter_turns) % 4]

    def reversed(self) -> "Orientation":
        return self.rotated(2)

    @property
    def direction(self) -> tuple[float, float]:
        """Horizontal unit vector the orientation points along."""
        return {
            Orientation.NORTH: (0.0, 1.0),
            Orientation.EAST: (1.0, 0.0),
            Orientation.SOUTH: (0.0, -1.0),
            Orientation.WEST: (-1.0, 0.0),
        }[self]

    @property
    def swaps_horizontal_dims(self) -> bool:
        """True for the 90/270 degree orientations, which swap width and depth."""
        return self in (Orientation.EAST, Orientation.WEST)


@dataclass(frozen=True)
class Vec3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.x, self.y, self.z)):
            raise ValueError(f"non-finite component in {self!r}")

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def scaled(self, k: float) -> "Vec3":
        return Vec3(self.x * k, self.y * k, self.z * k)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


_AXES = ("x", "y", "z")


@dataclass(frozen=True)
class Cuboid:
    """Axis-aligned box given by min and max corners; degenerate (zero-width)
    boxes are allowed."""

    min: Vec3
    max: Vec3

    def __post_init__(self):
        for ax in _AXES:
            if getattr(self.min, ax) > getattr(self.max, ax):
                raise ValueError(f"cuboid min exceeds max on {ax}")

    @property
    def size(self) -> Vec3:
        return self.max - self.min

    @property
    def center(self) -> Vec3:
        return Vec3(
            (self.min.x + self.max.x) / 2,
            (self.min.y + self.max.y) / 2,
            (self.min.z + self.max.z) / 2,
        )

    @property
    def volume(self) -> float:
        s = self.size
        return s.x * s.y * s.z

    def translated(self, offset: Vec3) -> "Cuboid":
        return Cuboid(self.min + offset, self.max + offset)

    def contains(self, other: "Cuboid") -> bool:
        return all(
            getattr(self.min, ax) <= getattr(other.min, ax)
            and getattr(other.max, ax) <= getattr(self.max, ax)
            for ax in _AXES
        )


def intersection(a: Cuboid, b: Cuboid) -> Optional[Cuboid]:
    """Per-axis interval intersection; None when the boxes are disjoint.

    Touching boxes yield a degenerate (zero-width) cuboid rather than None.
    """
    lo = Vec3(max(a.min.x, b.min.x), max(a.min.y, b.min.y), max(a.min.z, b.min.z))
    hi = Vec3(min(a.max.x, b.max.x), min(a.max.y, b.max.y), min(a.max.z, b.max.z))
    for ax in _AXES:
        if getattr(hi, ax) < getattr(lo, ax):
            return None
    return Cuboid(lo, hi)


def protrusion(obj: Cuboid, bounds: Cuboid) -> float:
    """Total linear distance the object's box sticks out of bounds.

    Per-axis overhangs are summed over both sides of all three axes; zero
    exactly when obj is contained in bounds.
    """
    total = 0.0
    for ax in _AXES:
        total += max(0.0, getattr(bounds.min, ax) - getattr(obj.min, ax))
        total += max(0.0, getattr(obj.max, ax) - getattr(bounds.max, ax))
    return total


@dataclass(frozen=True)
class ObjectSpec:
    name: str
    dims: Vec3  # object-local width (x), depth (y), height (z)
    support: SupportType = SupportType.STANDING
    is_opening: bool = False  # doors and windows get expanded collision boxes

    def __post_init__(self):
        if min(self.dims.x, self.dims.y, self.dims.z) <= 0:
            raise ValueError(f"object {self.name!r} has non-positive dims")

    @property
    def volume(self) -> float:
        return self.dims.x * self.dims.y * self.dims.z


@dataclass(frozen=True)
class SceneTemplate:
    prompt: str
    bounds: Cuboid
    objects: tuple[ObjectSpec, ...]

    def __post_init__(self):
        names = [o.name for o in self.objects]
        if len(set(names)) != len(names):
            raise ValueError("duplicate object names in template")

    def object_by_name(self, name: str) -> ObjectSpec:
        for o in self.objects:
            if o.name == name:
                return o
        raise KeyError(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(o.name for o in self.objects)


@dataclass(frozen=True)
class PlacedObject:
    spec: ObjectSpec
    position: Vec3  # min corner of the world cuboid
    orientation: Orientation = Orientation.NORTH


@dataclass(frozen=True)
class Layout:
    template: SceneTemplate
    placements: tuple[PlacedObject, ...]

    def __post_init__(self):
        placed = [p.spec.name for p in self.placements]
        if sorted(placed) != sorted(self.template.names):
            raise ValueError("placements and template objects do not match by name")

    def placement(self, name: str) -> PlacedObject:
        for p in self.placements:
            if p.spec.name == name:
                return p
        raise KeyError(name)


def oriented_dims(spec: ObjectSpec, orientation: Orientation) -> Vec3:
    d = spec.dims
    if orientation.swaps_horizontal_dims:
        return Vec3(d.y, d.x, d.z)
    return d


def world_cuboid(p: PlacedObject) -> Cuboid:
    """World-frame axis-aligned box of a placement (orientation dim-swap applied)."""
    return Cuboid(p.position, p.position + oriented_dims(p.spec, p.orientation))


def expanded_collision_cuboid(p: PlacedObject, margin: float) -> Cuboid:
    """Collision box of a door/window grown by `margin` toward its facing
    direction, reserving clearance for the opening."""
    if not p.spec.is_opening:
        raise ValueError(f"object {p.spec.name!r} is not an opening")
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    box = world_cuboid(p)
    dx, dy = p.orientation.direction
    lo, hi = box.min, box.max
    if dx > 0:
        hi = Vec3(hi.x + margin, hi.y, hi.z)
    elif dx < 0:
        lo = Vec3(lo.x - margin, lo.y, lo.z)
    if dy > 0:
        hi = Vec3(hi.x, hi.y + margin, hi.z)
    elif dy < 0:
        lo = Vec3(lo.x, lo.y - margin, lo.z)
    return Cuboid(lo, hi)


def collision_cuboid(p: PlacedObject, opening_margin: float) -> Cuboid:
    """Box used for overlap checks: expanded for openings, plain otherwise."""
    if p.spec.is_opening and opening_margin > 0:
        return expanded_collision_cuboid(p, opening_margin)
    return world_cuboid(p)


def back_face(p: PlacedObject) -> tuple[str, float]:
    """(axis, plane coordinate) of the mountable back face, the face opposite
    the facing direction."""
    box = world_cuboid(p)
    dx, dy = p.orientation.direction
    if dx > 0:
        return "x", box.min.x
    if dx < 0:
        return "x", box.max.x
    if dy > 0:
        return "y", box.min.y
    return "y", box.max.y


# --- JSON interchange -------------------------------------------------------
#
# Template files: {"prompt": str, "bounds": [x, y, z],
#                  "objects": [{"name", "dims": [w, d, h],
#                               "support": "standing|wall_mounted|floating",
#                               "opening": bool}]}
# Layout files mirror the template with "position": [x, y, z] and
# "orientation": "north|east|south|west" added per object.


def _vec_from(data) -> Vec3:
    x, y, z = data
    return Vec3(float(x), float(y), float(z))


def template_from_dict(data: dict) -> SceneTemplate:
    bounds = Cuboid(Vec3(0.0, 0.0, 0.0), _vec_from(data["bounds"]))
    objects = []
    for entry in data["objects"]:
        objects.append(
            ObjectSpec(
                name=entry["name"],
                dims=_vec_from(entry["dims"]),
                support=SupportType(entry.get("support", "standing")),
                is_opening=bool(entry.get("opening", False)),
            )
        )
    return SceneTemplate(prompt=data.get("prompt", ""), bounds=bounds, objects=tuple(objects))


def template_to_dict(t: SceneTemplate) -> dict:
    return {
        "prompt": t.prompt,
        "bounds": list(t.bounds.max.as_tuple()),
        "objects": [
            {
                "name": o.name,
                "dims": list(o.dims.as_tuple()),
                "support": o.support.value,
                "opening": o.is_opening,
            }
            for o in t.objects
        ],
    }


def layout_from_dict(data: dict) -> Layout:
    template = template_from_dict(data)
    placements = []
    for spec, entry in zip(template.objects, data["objects"]):
        placements.append(
            PlacedObject(
                spec=spec,
                position=_vec_from(entry["position"]),
                orientation=Orientation(entry.get("orientation", "north")),
            )
        )
    return Layout(template=template, placements=tuple(placements))


def layout_to_dict(layout: Layout) -> dict:
    data = template_to_dict(layout.template)
    by_name = {p.spec.name: p for p in layout.placements}
    for entry in data["objects"]:
        p = by_name[entry["name"]]
        entry["position"] = list(p.position.as_tuple())
        entry["orientation"] = p.orientation.value
    return data


def load_template(path: str | Path) -> SceneTemplate:
    return template_from_dict(json.loads(Path(path).read_text()))


def load_layout(path: str | Path) -> Layout:
    return layout_from_dict(json.loads(Path(path).read_text()))


def save_layout(layout: Layout, path: str | Path) -> None:
    Path(path).write_text(json.dumps(layout_to_dict(layout), indent=2) + "\n")
