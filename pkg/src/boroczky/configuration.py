"""The planar Böröczky line configuration and its intersection points.

Circle points are the 2n-th roots of unity P_r = (cos(pi r/n), sin(pi r/n)),
realized exactly in Q(zeta_M), M = lcm(12, 2n).  Line L_j joins P_{2j} and
P_{n-4j} (indices mod 2n), or is the tangent to x^2 + y^2 = z^2 at P_{2j} when
the two indices agree.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from dataclasses import dataclass, field as dc_field

from .exactfield import FieldSpec, make_cyclotomic
from .projplane import ProjLine, ProjPoint, concurrent, line_through, meet


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class Configuration:
    n: int
    field: FieldSpec
    lines: tuple[ProjLine, ...]
    circle_points: tuple[ProjPoint, ...]
    tangent_indices: tuple[int, ...]

    @property
    def conductor(self) -> int:
        return self.field.conductor

    def endpoints(self, j: int) -> tuple[int, int]:
        """Circle-point indices (mod 2n) joined by line j."""
        return (2 * j) % (2 * self.n), (self.n - 4 * j) % (2 * self.n)


@dataclass
class IncidenceReport:
    """Intersection points of a line set, grouped by multiplicity."""

    points_by_multiplicity: dict[int, list[tuple[ProjPoint, tuple[int, ...]]]]
    anomalies: list[str] = dc_field(default_factory=list)

    @property
    def triple_points(self) -> list[ProjPoint]:
        return [p for p, _ in self.points_by_multiplicity.get(3, [])]

    def count(self, multiplicity: int) -> int:
        return len(self.points_by_multiplicity.get(multiplicity, []))

    def count_at_least(self, multiplicity: int) -> int:
        return sum(len(v) for k, v in self.points_by_multiplicity.items() if k >= multiplicity)

    def histogram(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.points_by_multiplicity.items())}

    def all_points(self):
        for k in sorted(self.points_by_multiplicity):
            yield from ((p, k, idx) for p, idx in self.points_by_multiplicity[k])


def field_for(n: int) -> FieldSpec:
    return make_cyclotomic(math.lcm(12, 2 * n))


def circle_point(field: FieldSpec, n: int, r: int) -> ProjPoint:
    """P_r = exp(pi i r / n) as [cos : sin : 1]."""
    M = field.conductor
    zeta = field.gen("zeta")
    w = zeta ** ((M // (2 * n)) * (r % (2 * n)))
    winv = zeta ** ((M // (2 * n)) * ((-r) % (2 * n)))
    minus_i = zeta ** (3 * M // 4)
    cos = (w + winv) * Fraction(1, 2)
    sin = (w - winv) * minus_i * Fraction(1, 2)
    return ProjPoint([cos, sin, field.one()], field)


def build_config(n: int) -> Configuration:
    if n < 3:
        raise ConfigurationError(f"Böröczky configuration needs n >= 3, got {n}")
    K = field_for(n)
    pts = tuple(circle_point(K, n, r) for r in range(2 * n))
    lines = []
    tangents = []
    for j in range(n):
        a, b = (2 * j) % (2 * n), (n - 4 * j) % (2 * n)
        if a == b:
            x, y, z = pts[a].coords
            lines.append(ProjLine([x, y, -z], K))
            tangents.append(j)
        else:
            lines.append(line_through(pts[a], pts[b]))
    if len(set(lines)) != n:
        raise ConfigurationError(f"construction lines coincide for n={n}")
    return Configuration(n, K, tuple(lines), pts, tuple(tangents))


def incidence_report(lines, planar: bool = True) -> IncidenceReport:
    """Classify every pairwise meet of ``lines`` by the number of lines through it.

    ``lines`` may be a :class:`Configuration` or a sequence of distinct lines.
    Points are listed sorted by their canonical string coordinates.
    """
    if isinstance(lines, Configuration):
        lines = lines.lines
    incident: dict[ProjPoint, set[int]] = {}
    for i, j in itertools.combinations(range(len(lines)), 2):
        p = meet(lines[i], lines[j])
        incident.setdefault(p, set()).update((i, j))
    by_mult: dict[int, list] = {}
    for p, idx in incident.items():
        by_mult.setdefault(len(idx), []).append((p, tuple(sorted(idx))))
    for v in by_mult.values():
        v.sort(key=lambda item: item[0].key())
    report = IncidenceReport(dict(sorted(by_mult.items())))
    if planar:
        for k, v in report.points_by_multiplicity.items():
            if k >= 4:
                report.anomalies.append(f"{len(v)} point(s) of multiplicity {k}")
    return report


def triple_points(config: Configuration) -> list[ProjPoint]:
    return incidence_report(config).triple_points


def triple_count_formula(n: int) -> int:
    if n < 3:
        raise ValueError("n must be >= 3")
    return n * (n - 3) // 6 + 1


def concurrency_table(config: Configuration) -> dict[tuple[int, int, int], bool]:
    """Geometric concurrency of every triple of distinct construction lines."""
    return {
        (i, j, k): concurrent(config.lines[i], config.lines[j], config.lines[k])
        for i, j, k in itertools.combinations(range(config.n), 3)
    }


def verify_concurrency_criterion(config: Configuration) -> bool:
    """True iff L_i, L_j, L_k concurrent <=> n | i + j + k, over all triples."""
    if config.n % 2:
        raise ValueError("the index criterion is stated for even n only")
    return all(
        conc == ((i + j + k) % config.n == 0)
        for (i, j, k), conc in concurrency_table(config).items()
    )


def concurrency_mismatches(config: Configuration) -> list[tuple[int, int, int]]:
    """Triples where geometry and the divisibility rule disagree (any parity of n)."""
    return [
        t for t, conc in concurrency_table(config).items()
        if conc != (sum(t) % config.n == 0)
    ]


def points_on_line(config: Configuration, i: int, report: IncidenceReport | None = None) -> int:
    if not 0 <= i < config.n:
        raise IndexError(f"line index {i} out of range for n={config.n}")
    if report is None:
        report = incidence_report(config)
    return sum(1 for _, idx in report.points_by_multiplicity.get(3, []) if i in idx)


def expected_points_on_line(n: int, i: int) -> int:
    """Per-line count of triple points predicted for even n >= 8."""
    if n % 2 or n < 8:
        raise ValueError("case formula holds for even n >= 8")
    if i in (0, 1) or i % 2:
        return n // 2 - 1
    if 3 * i in (n, 2 * n):
        return n // 2 - 1
    return n // 2 - 2


def tangent_solutions(n: int) -> list[int]:
    """Indices j with 2j = n - 4j (mod 2n), found by direct search."""
    return [j for j in range(n) if (6 * j - n) % (2 * n) == 0]
