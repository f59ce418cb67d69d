"""The elliptified configuration on the Fermat cubic x^3 + y^3 + z^3 = 0.

Points of E[6] live in Q(s, t), s^3 = -2, t^2 + t + 1 = 0.  The group law uses
the flex O = [1:-1:0] as identity, so three curve points are collinear exactly
when they sum to O.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .configuration import IncidenceReport, incidence_report
from .exactfield import FieldSpec, make_fermat_field, parse_element
from .forms import Form
from .projplane import DegenerateError, ProjLine, ProjPoint, dedupe_projective, dot


class TableMismatchError(AssertionError):
    pass


class NotOnCurveError(ValueError):
    pass


# Operation table for E[6]: TABLE_E6[j][i] = i*alpha + j*beta.
TABLE_E6 = [
    ["[1:-1:0]", "[1:s:1]", "[0:1:-1]", "[1:1:s]", "[1:0:-1]", "[s:1:1]"],
    ["[s:1:t]", "[t^2:1:s]", "[t:s:1]", "[s:t^2:1]", "[1:t:s]", "[1:s:t^2]"],
    ["[-1:0:t]", "[s:t^2:t]", "[-t:1:0]", "[t:s:t^2]", "[0:1:-t^2]", "[t^2:t:s]"],
    ["[t^2:t^2:s]", "[t:s:t]", "[s:t^2:t^2]", "[t:t:s]", "[t^2:s:t^2]", "[s:t:t]"],
    ["[0:1:-t]", "[t:t^2:s]", "[-1:0:t^2]", "[s:t:t^2]", "[-t^2:1:0]", "[t^2:s:t]"],
    ["[1:s:t]", "[s:1:t^2]", "[t:1:s]", "[t^2:s:1]", "[s:t:1]", "[1:t^2:s]"],
]

# S3-orbit representatives of the 48 triple points, keyed by orbit size.
ORBIT_REPRESENTATIVES = {
    1: ["[1:1:1]"],
    2: ["[1:t:t^2]"],
    3: ["[1:0:0]", "[1:1:t]", "[1:t:t]", "[1:1:-s^2-t]", "[1:1:-s^2*t-1]",
        "[1:1:-s^2*t^2-t^2]", "[1:s^2*t:s^2*t]"],
    6: ["[1:t:-s^2+t+1]", "[1:t:-s^2*t-t]", "[1:t:s^2*t+s^2-1]", "[2:2*t:-s*t]"],
}

TANGENT_LABELS = [(1, 1), (1, 3), (1, 5), (3, 1), (3, 3), (3, 5), (5, 1), (5, 3), (5, 5)]


def parse_point(field: FieldSpec, text: str) -> ProjPoint:
    parts = text.strip().strip("[]").split(":")
    return ProjPoint([parse_element(field, p) for p in parts], field)


class FermatCubic:
    """x^3 + y^3 + z^3 over a field, with the chord-tangent construction."""

    def __init__(self, field: FieldSpec | None = None):
        self.field = field or make_fermat_field()
        K = self.field
        self.form = Form(K, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
        self.grad = [self.form.derivative(v) for v in range(3)]
        self.identity = ProjPoint([K.one(), -K.one(), K.zero()], K)

    def contains(self, p: ProjPoint) -> bool:
        return not self.form.evaluate(p.coords)

    def _check(self, p: ProjPoint):
        if not self.contains(p):
            raise NotOnCurveError(f"{p} is not on x^3+y^3+z^3=0")

    def gradient(self, p: ProjPoint):
        return [g.evaluate(p.coords) for g in self.grad]

    def tangent_line(self, p: ProjPoint) -> ProjLine:
        self._check(p)
        return ProjLine(self.gradient(p), self.field)

    def third_intersection(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        """Third point of the chord pq (tangent at p when p == q) on the curve.

        The cubic restricted to u*p + w*r is
        u^3 C(p) + u^2 w (r . grad C(p)) + u w^2 (p . grad C(r)) + w^3 C(r);
        the known roots are divided out and the leftover linear factor read off.
        """
        self._check(p)
        self._check(q)
        if p == q:
            a, b, c = self.gradient(p)
            zero = self.field.zero()
            r = None
            for cand in ((b, -a, zero), (c, zero, -a), (zero, c, -b)):
                if any(cand):
                    cand_pt = ProjPoint(cand, self.field)
                    if cand_pt != p:
                        r = cand_pt
                        break
            if r is None:
                raise DegenerateError(f"cannot parametrize the tangent at {p}")
            lin_u = dot(p.coords, self.gradient(r))
            lin_w = self.form.evaluate(r.coords)
            # w^2 (u * lin_u + w * lin_w): remaining root (u, w) = (lin_w, -lin_u)
            coords = [lin_w * x - lin_u * y for x, y in zip(p.coords, r.coords)]
        else:
            c2 = dot(q.coords, self.gradient(p))
            c1 = dot(p.coords, self.gradient(q))
            if not c1 and not c2:
                raise DegenerateError("line is contained in the curve")
            # u w (c2 u + c1 w): remaining root (u, w) = (c1, -c2)
            coords = [c1 * x - c2 * y for x, y in zip(p.coords, q.coords)]
        out = ProjPoint(coords, self.field)
        self._check(out)
        return out

    def add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        return self.third_intersection(self.identity, self.third_intersection(p, q))

    def negate(self, p: ProjPoint) -> ProjPoint:
        return self.third_intersection(self.identity, p)


@dataclass
class TorsionTable:
    curve: FermatCubic
    grid: list[list[ProjPoint]]  # grid[i][j] = i*alpha + j*beta

    def __getitem__(self, ij) -> ProjPoint:
        i, j = ij
        return self.grid[i % 6][j % 6]

    def points(self) -> list[ProjPoint]:
        return [self.grid[i][j] for i in range(6) for j in range(6)]

    def index_of(self, p: ProjPoint) -> tuple[int, int]:
        for i in range(6):
            for j in range(6):
                if self.grid[i][j] == p:
                    return i, j
        raise KeyError(p)


def generators(field: FieldSpec | None = None) -> tuple[ProjPoint, ProjPoint]:
    K = field or make_fermat_field()
    return parse_point(K, "[1:s:1]"), parse_point(K, "[s:1:t]")


def generate_E6(check_table: bool = True) -> TorsionTable:
    """Fill grid[i][j] = i*alpha + j*beta by repeated addition."""
    E = FermatCubic()
    alpha, beta = generators(E.field)
    col = [E.identity]
    for _ in range(5):
        col.append(E.add(col[-1], beta))
    grid = []
    row_start = E.identity
    for i in range(6):
        row = [row_start]
        for _ in range(5):
            row.append(E.add(row[-1], beta))
        grid.append(row)
        row_start = E.add(row_start, alpha)
    table = TorsionTable(E, grid)
    if check_table:
        mismatches = table_mismatches(table)
        if mismatches:
            raise TableMismatchError("E[6] disagrees with the reference table at " + ", ".join(mismatches))
        if E.add(row_start, E.identity) != E.identity:
            raise TableMismatchError("6*alpha != O")
        if E.add(grid[0][5], beta) != E.identity:
            raise TableMismatchError("6*beta != O")
    return table


def table_mismatches(table: TorsionTable) -> list[str]:
    K = table.curve.field
    bad = []
    for j, row in enumerate(TABLE_E6):
        for i, text in enumerate(row):
            if table.grid[i][j] != parse_point(K, text):
                bad.append(f"{i}alpha+{j}beta")
    return bad


def raw_line(table: TorsionTable, i: int, j: int) -> ProjLine:
    """L(i, j): the line through i*a+j*b and (3-2i)*a+(3-2j)*b, or the tangent if they agree."""
    p = table[i, j]
    q = table[3 - 2 * i, 3 - 2 * j]
    if p == q:
        return table.curve.tangent_line(p)
    from .projplane import line_through
    return line_through(p, q)


@dataclass
class EllipticConfig:
    table: TorsionTable
    raw_lines: dict[tuple[int, int], ProjLine]
    lines: list[ProjLine]
    incidence: IncidenceReport

    @property
    def triple_points(self) -> list[ProjPoint]:
        return self.incidence.triple_points

    def tangent_labels(self) -> list[tuple[int, int]]:
        return [(i, j) for (i, j) in self.raw_lines
                if self.table[i, j] == self.table[3 - 2 * i, 3 - 2 * j]]


class ConfigStatisticsError(AssertionError):
    pass


def build_elliptic_config(table: TorsionTable | None = None, check: bool = True) -> EllipticConfig:
    table = table or generate_E6()
    raw = {(i, j): raw_line(table, i, j) for i in range(6) for j in range(6)}
    lines = dedupe_projective(raw.values())
    report = incidence_report(lines, planar=False)
    cfg = EllipticConfig(table, raw, lines, report)
    if check:
        problems = statistics_problems(cfg)
        if problems:
            raise ConfigStatisticsError("; ".join(problems))
    return cfg


def statistics_problems(cfg: EllipticConfig) -> list[str]:
    out = []
    rep = cfg.incidence
    checks = [
        ("unique lines", len(cfg.lines), 18),
        ("points of multiplicity >= 2", rep.count_at_least(2), 57),
        ("points of multiplicity 3", rep.count(3), 48),
        ("points of multiplicity >= 4", rep.count_at_least(4), 0),
        ("triple points on the curve", sum(cfg.table.curve.contains(p) for p in rep.triple_points), 0),
    ]
    for name, got, want in checks:
        if got != want:
            out.append(f"{name}: got {got}, expected {want}")
    return out


def permute(p: ProjPoint, sigma) -> ProjPoint:
    return ProjPoint([p.coords[sigma[k]] for k in range(3)], p.field)


def permute_line(l: ProjLine, sigma) -> ProjLine:
    return ProjLine([l.coords[sigma[k]] for k in range(3)], l.field)


S3 = list(itertools.permutations(range(3)))


def s3_orbits(points) -> list[list[ProjPoint]]:
    """Partition a point set into orbits under coordinate permutation."""
    pts = list(points)
    pool = set(pts)
    seen = set()
    orbits = []
    for p in pts:
        if p in seen:
            continue
        orbit = dedupe_projective(permute(p, s) for s in S3)
        for q in orbit:
            if q not in pool:
                raise ValueError(f"point set is not closed under S3: {q} escapes from {p}")
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def s3_orbit_profile(points) -> dict[int, int]:
    profile: dict[int, int] = {}
    for orb in s3_orbits(points):
        profile[len(orb)] = profile.get(len(orb), 0) + 1
    return dict(sorted(profile.items()))


def no_planar_match(target: int = 48, n_max: int = 100) -> list[int]:
    """Values n in [3, n_max] with n(n-3)/6 + 1 == target (exact, no flooring)."""
    return [n for n in range(3, n_max + 1) if n * (n - 3) % 6 == 0 and n * (n - 3) // 6 + 1 == target]


def elliptic_containment(cfg: EllipticConfig | None = None, dim_check: bool = True):
    """Product of the 18 lines against the symbolic cube and the square of the ideal of the 48 points."""
    from .fatpoints import containment_witness
    cfg = cfg or build_elliptic_config()
    return containment_witness(cfg.lines, cfg.triple_points, "elliptic:E6", dim_check=dim_check)
