"""Points and lines of the projective plane over an exact field."""

from __future__ import annotations

from typing import Iterable, Sequence

from .exactfield import FieldElement, FieldSpec, parse_element, to_string


class DegenerateError(ValueError):
    """Raised for constructions that are undefined (equal points, equal lines, ...)."""


def _canonical(coords: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    for k, c in enumerate(coords):
        if c:
            if c == 1:
                return tuple(coords)
            inv = c.inverse()
            return tuple(x * inv if x else x for x in coords[:k]) + (coords[k].field.one(),) + tuple(
                x * inv if x else x for x in coords[k + 1:]
            )
    raise DegenerateError("all coordinates are zero")


class _Homogeneous:
    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Sequence, field: FieldSpec | None = None):
        if len(coords) != 3:
            raise ValueError("expected three homogeneous coordinates")
        if field is None:
            field = next(c.field for c in coords if isinstance(c, FieldElement))
        self.coords = _canonical([field(c) for c in coords])
        self._hash = hash(self.coords)

    @property
    def field(self) -> FieldSpec:
        return self.coords[0].field

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return self._hash

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def key(self) -> tuple[str, str, str]:
        return tuple(to_string(c) for c in self.coords)

    def __repr__(self):
        return f"{type(self).__name__}[{' : '.join(self.key())}]"


class ProjPoint(_Homogeneous):
    """A point [x:y:z], stored with its first nonzero coordinate equal to 1."""

    def is_affine(self) -> bool:
        return bool(self.coords[2])

    def to_json(self) -> dict:
        return {"coords": list(self.key())}

    @classmethod
    def from_json(cls, field: FieldSpec, data: dict) -> ProjPoint:
        return cls([parse_element(field, s) for s in data["coords"]], field)


class ProjLine(_Homogeneous):
    """A line a*x + b*y + c*z = 0 given by its dual coordinates (a, b, c)."""

    def contains(self, p: ProjPoint) -> bool:
        return not dot(self.coords, p.coords)

    def to_json(self, index: int | None = None) -> dict:
        d = {"coeffs": list(self.key())}
        if index is not None:
            d["index"] = index
        return d

    @classmethod
    def from_json(cls, field: FieldSpec, data: dict) -> ProjLine:
        return cls([parse_element(field, s) for s in data["coeffs"]], field)


def dot(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    acc = u[0] * v[0]
    if u[1] and v[1]:
        acc = acc + u[1] * v[1]
    if u[2] and v[2]:
        acc = acc + u[2] * v[2]
    return acc


def cross(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(a, b, c) -> FieldElement:
    return dot(a, cross(b, c))


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise DegenerateError(f"line_through needs distinct points, got {p} twice")
    return ProjLine(cross(p.coords, q.coords), p.field)


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1 == l2:
        raise DegenerateError(f"meet of a line with itself: {l1}")
    return ProjPoint(cross(l1.coords, l2.coords), l1.field)


def concurrent(l1: ProjLine, l2: ProjLine, l3: ProjLine) -> bool:
    if l1 == l2 or l1 == l3 or l2 == l3:
        raise DegenerateError("concurrent() needs three distinct lines")
    return not det3(l1.coords, l2.coords, l3.coords)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return not det3(p.coords, q.coords, r.coords)


def dedupe_projective(items: Iterable[_Homogeneous]) -> list:
    """Drop scalar duplicates, keeping the first occurrence of each class."""
    seen = set()
    out = []
    for it in items:
        if it not in seen:
            seen.add(it)
            out.append(it)
    return out
