"""Dihedral symmetry of order 6 acting on the plane, and the invariant ring k[z, u, v].

The group is generated by rotation through 2*pi/3 about the origin and the
reflection y -> -y.  Points transform by g . [x:y:z] = [g(x, y) : z]; forms by
(g . f)(X) = f(g^-1 X), so that vanishing sets move along with the points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exactfield import FieldElement, FieldSpec
from .forms import Form
from .projplane import ProjLine, ProjPoint


class OrbitClosureError(ValueError):
    pass


class OrbitConsistencyError(AssertionError):
    pass


def sqrt3(field: FieldSpec) -> FieldElement:
    """sqrt(3) = zeta_12 + zeta_12^-1 inside a cyclotomic field of conductor divisible by 12."""
    M = getattr(field, "conductor", None)
    if not M or M % 12:
        raise ValueError("field must be cyclotomic with conductor divisible by 12")
    zeta = field.gen("zeta")
    return zeta ** (M // 12) + zeta ** (M - M // 12)


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(1, 3)), a[i][0] * b[0][j]) for j in range(3)] for i in range(3)]


@dataclass(frozen=True)
class GroupElement:
    matrix: tuple[tuple[FieldElement, ...], ...]
    is_reflection: bool
    name: str = ""

    def __mul__(self, other: GroupElement) -> GroupElement:
        m = _matmul(self.matrix, other.matrix)
        return GroupElement(tuple(tuple(r) for r in m), self.is_reflection != other.is_reflection)

    def inverse(self) -> GroupElement:
        # orthogonal with bottom row (0, 0, 1): the inverse is the transpose
        m = tuple(tuple(self.matrix[j][i] for j in range(3)) for i in range(3))
        return GroupElement(m, self.is_reflection, self.name + "^-1" if self.name else "")

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def order(self) -> int:
        k, g = 1, self
        ident = _identity(self.matrix[0][0].field)
        while g.matrix != ident:
            g = g * self
            k += 1
        return k


def _identity(field):
    one, zero = field.one(), field.zero()
    return tuple(tuple(one if i == j else zero for j in range(3)) for i in range(3))


def rotation(field: FieldSpec, sixths: int) -> GroupElement:
    """Rotation by sixths * pi/3 about the origin."""
    r3 = sqrt3(field)
    half = Fraction(1, 2)
    cs = [(1, 0), (half, 1), (-half, 1), (-1, 0), (-half, -1), (half, -1)][sixths % 6]
    c = field(cs[0])
    s = r3 * half * cs[1] if cs[1] else field.zero()
    one, zero = field.one(), field.zero()
    m = ((c, -s, zero), (s, c, zero), (zero, zero, one))
    return GroupElement(m, False, f"rot{sixths % 6}pi/3")


def reflection(field: FieldSpec) -> GroupElement:
    one, zero = field.one(), field.zero()
    return GroupElement(((one, zero, zero), (zero, -one, zero), (zero, zero, one)), True, "refl")


def d6_group(field: FieldSpec) -> list[GroupElement]:
    """The six elements: identity, two rotations of order 3, three reflections."""
    r = rotation(field, 2)
    s = reflection(field)
    e = GroupElement(_identity(field), False, "id")
    rots = [e, r, r * r]
    out = rots + [g * s for g in rots]
    names = ["id", "rot120", "rot240", "refl0", "refl120", "refl240"]
    return [GroupElement(g.matrix, g.is_reflection, nm) for g, nm in zip(out, names)]


def act(g: GroupElement, p: ProjPoint) -> ProjPoint:
    m = g.matrix
    c = p.coords
    return ProjPoint([m[i][0] * c[0] + m[i][1] * c[1] + m[i][2] * c[2] for i in range(3)], p.field)


def act_on_form(g: GroupElement, f: Form) -> Form:
    return f.substitute(g.inverse().matrix)


def act_on_line(g: GroupElement, l: ProjLine) -> ProjLine:
    # a line is the zero set of a linear form: transform it as a form
    f = act_on_form(g, Form.linear(l.field, *l.coords))
    return ProjLine(f.to_vector(), l.field)


@dataclass
class Orbit:
    points: list[ProjPoint]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def representative(self) -> ProjPoint:
        return min(self.points, key=lambda p: p.key())


def orbit_of(p: ProjPoint, group: Sequence[GroupElement]) -> list[ProjPoint]:
    out = []
    for g in group:
        q = act(g, p)
        if q not in out:
            out.append(q)
    return out


def orbit_decompose(points: Sequence[ProjPoint], group: Sequence[GroupElement] | None = None) -> list[Orbit]:
    """Partition points into orbits; raises OrbitClosureError if the set is not closed."""
    points = list(points)
    if not points:
        return []
    group = group or d6_group(points[0].field)
    pool = set(points)
    seen: set[ProjPoint] = set()
    orbits = []
    for p in points:
        if p in seen:
            continue
        orb = orbit_of(p, group)
        for q in orb:
            if q not in pool:
                raise OrbitClosureError(f"point set not closed under the action: {q} (image of {p}) is missing")
        seen.update(orb)
        orbits.append(Orbit(sorted(orb, key=lambda q: q.key())))
    orbits.sort(key=lambda o: (o.size, o.representative.key()))
    return orbits


def orbit_profile(orbits: Sequence[Orbit]) -> dict[int, int]:
    prof: dict[int, int] = {}
    for o in orbits:
        prof[o.size] = prof.get(o.size, 0) + 1
    return dict(sorted(prof.items()))


def orbit_count_formulas(n: int, simplified: bool = False) -> tuple[int, int]:
    """Closed-form counts (O3, O6) of size-3 and size-6 orbits of triple points."""
    if n < 3 or n % 3:
        raise ValueError(f"orbit formulas need 3 | n and n >= 3, got {n}")
    o3 = (n - 1) // 2 - 1
    if simplified:
        if n % 6:
            raise ValueError("the simplified size-6 count needs 6 | n")
        o6 = Fraction((n - 6) ** 2, 36)
    else:
        o6 = Fraction(n * (n - 3), 36) - Fraction((n - 1) // 2, 2) + Fraction(1, 2)
    if o6.denominator != 1:
        raise ValueError(f"size-6 orbit count is not an integer for n={n}: {o6}")
    return o3, int(o6)


class InvariantForms(NamedTuple):
    u: Form
    v: Form
    p: Form


def invariant_forms(field: FieldSpec) -> InvariantForms:
    r3 = sqrt3(field)
    x, y, z = Form.variables(field)
    u = x * x + y * y
    v = x * (x - y * r3) * (x + y * r3)
    p = y * (y - x * r3) * (y + x * r3)
    return InvariantForms(u, v, p)


def reflection_lines(field: FieldSpec) -> list[ProjLine]:
    """The three lines y = 0, y = sqrt3 x, y = -sqrt3 x whose union is V(p)."""
    r3 = sqrt3(field)
    one, zero = field.one(), field.zero()
    return [ProjLine([zero, one, zero], field), ProjLine([-r3, one, zero], field), ProjLine([r3, one, zero], field)]


class WeightedPoint(NamedTuple):
    z: FieldElement
    u: FieldElement
    v: FieldElement


def _affine(p: ProjPoint):
    x, y, z = p.coords
    if not z:
        raise ValueError(f"{p} is at infinity; weighted normalization would need roots")
    zi = z.inverse()
    return x * zi, y * zi


def phi_map(p: ProjPoint) -> WeightedPoint:
    """[z : u : v] in P(1,2,3), normalized so the first coordinate is 1."""
    x, y = _affine(p)
    r3 = sqrt3(p.field)
    u = x * x + y * y
    v = x * (x - y * r3) * (x + y * r3)
    return WeightedPoint(p.field.one(), u, v)


def orbit6_ideal(orbit: Orbit) -> tuple[FieldElement, FieldElement]:
    """(r^2, gamma) with u - r^2 z^2 and v - gamma z^3 vanishing on the orbit."""
    if orbit.size != 6:
        raise ValueError(f"expected an orbit of size 6, got {orbit.size}")
    w = phi_map(orbit.points[0])
    K = orbit.points[0].field
    inv = invariant_forms(K)
    x, y, z = Form.variables(K)
    f2 = inv.u - (z * z).scale(w.u)
    f3 = inv.v - (z * z * z).scale(w.v)
    for q in orbit.points:
        if f2.evaluate(q.coords) or f3.evaluate(q.coords):
            raise OrbitConsistencyError(f"invariant forms do not vanish at {q}")
    return w.u, w.v


def skew_signs(f: Form, group: Sequence[GroupElement] | None = None) -> list[int] | None:
    """Sign s_g with g . f = s_g f for each group element, or None if some g . f is not +-f."""
    group = group or d6_group(f.field)
    signs = []
    for g in group:
        gf = act_on_form(g, f)
        if gf == f:
            signs.append(1)
        elif gf == -f:
            signs.append(-1)
        else:
            return None
    return signs


def skew_invariant_check(f: Form, group: Sequence[GroupElement] | None = None) -> bool:
    return skew_signs(f, group) is not None


def alternating_sign(f: Form, group: Sequence[GroupElement] | None = None) -> bool:
    """True if g . f = f on rotations and -f on reflections."""
    group = group or d6_group(f.field)
    signs = skew_signs(f, group)
    return signs is not None and all(s == (-1 if g.is_reflection else 1) for s, g in zip(signs, group))


def weighted_monomial_count(d: int) -> int:
    """Number of (a, b, c) with a + 2b + 3c = d."""
    return sum((d - 3 * c) // 2 + 1 for c in range(d // 3 + 1))


def weighted_hilbert(d: int) -> int:
    if d < 0:
        raise ValueError("d must be >= 0")
    val = (d * d + 6 * d + 12) // 12
    brute = weighted_monomial_count(d)
    if val != brute:
        raise OrbitConsistencyError(f"s_{d}: closed form {val} != monomial count {brute}")
    return val


def degree_bound(n: int) -> int:
    """d + 3 for the least d with floor(d^2/12 + d/2) >= (n - 6)^2 / 36."""
    if n % 6 or n < 12:
        raise ValueError(f"degree bound needs 6 | n and n >= 12, got {n}")
    target = Fraction((n - 6) ** 2, 36)
    d = 0
    while (d * d + 6 * d) // 12 < target:
        d += 1
    return d + 3


def stabilizes(g: GroupElement, points: Sequence[ProjPoint]) -> bool:
    pool = set(points)
    return all(act(g, p) in pool for p in points)


def pi3_rotation_stabilizes(points: Sequence[ProjPoint]) -> bool:
    """Whether rotation by pi/3 maps the point set to itself."""
    points = list(points)
    return stabilizes(rotation(points[0].field, 1), points)


__all__ = [
    "GroupElement", "Orbit", "InvariantForms", "WeightedPoint", "OrbitClosureError", "OrbitConsistencyError",
    "sqrt3", "rotation", "reflection", "d6_group", "act", "act_on_form", "act_on_line", "orbit_of",
    "orbit_decompose", "orbit_profile", "orbit_count_formulas", "invariant_forms", "reflection_lines",
    "phi_map", "orbit6_ideal", "skew_signs", "skew_invariant_check", "alternating_sign",
    "weighted_monomial_count", "weighted_hilbert", "degree_bound", "stabilizes", "pi3_rotation_stabilizes",
]
