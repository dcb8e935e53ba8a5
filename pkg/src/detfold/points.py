"""Projective points in canonical form (first nonzero coordinate scaled to 1)."""

from __future__ import annotations

from .errors import InputError

SPACE_DIMS = {"x": 3, "u": 3, "p5": 6}


class ProjPoint:
    """Immutable projective point over a fixed field, canonically scaled."""

    __slots__ = ("coords", "space", "field")

    def __init__(self, field, coords, space: str):
        if space not in SPACE_DIMS:
            raise InputError(f"unknown ambient space {space!r}")
        coords = tuple(field.coerce(c) for c in coords)
        if len(coords) != SPACE_DIMS[space]:
            raise InputError(
                f"point in {space} needs {SPACE_DIMS[space]} coordinates, got {len(coords)}"
            )
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise InputError("(0:...:0) is not a projective point")
        coords = tuple(c / lead for c in coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def sort_key(self):
        return tuple(self.field.sort_key(c) for c in self.coords)

    def map_field(self, field) -> "ProjPoint":
        return ProjPoint(field, [field.coerce(c) for c in self.coords], self.space)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.space == other.space and self.coords == other.coords

    def __hash__(self):
        return hash((self.space, self.coords))

    def __str__(self):
        return "(" + ":".join(self.field.format(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


def sorted_points(points) -> list[ProjPoint]:
    return sorted(points, key=lambda p: p.sort_key())


def format_points(points) -> str:
    pts = sorted_points(points)
    return "; ".join(str(p) for p in pts) if pts else "-"
