import functools
import itertools

import pytest

from boroczky.elliptic import (
    ORBIT_REPRESENTATIVES,
    S3,
    TABLE_E6,
    TANGENT_LABELS,
    FermatCubic,
    NotOnCurveError,
    generate_E6,
    generators,
    no_planar_match,
    parse_point,
    permute,
    permute_line,
    s3_orbit_profile,
    s3_orbits,
    table_mismatches,
)
from boroczky.fatpoints import lines_product, vanishes_to_order
from boroczky.projplane import ProjLine, collinear, dot, line_through

from conftest import elliptic_config


@functools.lru_cache(maxsize=None)
def table():
    return generate_E6()


def E():
    return table().curve


def pt(text):
    return parse_point(E().field, text)


def test_flex_tangent_returns_the_flex():
    O = E().identity
    assert E().third_intersection(O, O) == O


def test_third_point_of_generators_is_collinear():
    a, b = generators(E().field)
    c = E().third_intersection(a, b)
    assert E().contains(c)
    assert collinear(a, b, c)
    assert line_through(a, b).contains(c)


def test_tangent_line_is_the_gradient_line():
    p = pt("[t^2:1:s]")
    x, y, z = p.coords
    assert E().tangent_line(p) == ProjLine([x * x, y * y, z * z], E().field)


def test_off_curve_rejected():
    with pytest.raises(NotOnCurveError):
        E().third_intersection(pt("[1:1:1]"), E().identity)


def test_add_examples():
    a, b = generators(E().field)
    O = E().identity
    assert E().add(O, a) == a
    assert E().add(a, b) == pt("[t^2:1:s]")
    assert E().add(b, b) == pt("[-1:0:t]")


@pytest.mark.parametrize("i, j, text", [(5, 0, "[s:1:1]"), (3, 3, "[t:t:s]"), (0, 0, "[1:-1:0]")])
def test_table_cells(i, j, text):
    assert table()[i, j] == pt(text)


def test_table_matches_reference_everywhere():
    assert table_mismatches(table()) == []
    assert len(set(table().points())) == 36
    assert len(TABLE_E6) == 6 and all(len(r) == 6 for r in TABLE_E6)


@functools.lru_cache(maxsize=None)
def sum_table():
    """Index of grid[a] + grid[b] for all 36 x 36 pairs, computed with the chord-tangent law."""
    T = table()
    pts = T.points()
    index = {p: k for k, p in enumerate(pts)}
    return [[index[E().add(p, q)] for q in pts] for p in pts]


def test_sums_follow_index_arithmetic():
    S = sum_table()
    for (i1, j1), (i2, j2) in itertools.product(itertools.product(range(6), repeat=2), repeat=2):
        assert S[6 * i1 + j1][6 * i2 + j2] == 6 * ((i1 + i2) % 6) + (j1 + j2) % 6


def test_group_axioms_exhaustive():
    S = sum_table()
    n = 36
    for a in range(n):
        assert S[0][a] == a
        assert any(S[a][b] == 0 for b in range(n))
        for b in range(n):
            assert S[a][b] == S[b][a]
    for a, b, c in itertools.product(range(n), repeat=3):
        assert S[S[a][b]][c] == S[a][S[b][c]]


def test_collinear_triples_sum_to_identity():
    T = table()
    S = sum_table()
    pts = T.points()
    for i, j in itertools.product(range(6), repeat=2):
        p, q = T[i, j], T[3 - 2 * i, 3 - 2 * j]
        r = E().third_intersection(p, q)
        ip, iq, ir = (pts.index(x) for x in (p, q, r))
        assert S[S[ip][iq]][ir] == 0
        assert r == T[i + 3, j + 3]
        if p != q and r not in (p, q):
            assert collinear(p, q, r)


def test_raw_lines_pass_through_defining_points():
    cfg = elliptic_config()
    T = cfg.table
    for (i, j), l in cfg.raw_lines.items():
        p, q = T[i, j], T[3 - 2 * i, 3 - 2 * j]
        assert l.contains(p) and l.contains(q)


def test_tangent_labels():
    assert sorted(elliptic_config().tangent_labels()) == TANGENT_LABELS


def test_tangent_lines_touch_to_order_two():
    # the cubic restricted to the tangent line has a double root at the point
    cfg = elliptic_config()
    curve = cfg.table.curve
    for ij in TANGENT_LABELS:
        p = cfg.table[ij]
        l = cfg.raw_lines[ij]
        assert dot(l.coords, p.coords) == 0
        grad = curve.gradient(p)
        assert ProjLine(grad, curve.field) == l


def test_configuration_statistics():
    cfg = elliptic_config()
    rep = cfg.incidence
    assert len(cfg.lines) == 18
    assert rep.count_at_least(2) == 57
    assert rep.count(3) == 48
    assert rep.count(2) == 9
    assert rep.count_at_least(4) == 0
    assert not any(cfg.table.curve.contains(p) for p in cfg.triple_points)


def test_s3_profile():
    assert s3_orbit_profile(elliptic_config().triple_points) == {1: 1, 2: 1, 3: 7, 6: 4}


def test_orbit_representatives_match():
    cfg = elliptic_config()
    orbits = s3_orbits(cfg.triple_points)
    for size, reps in ORBIT_REPRESENTATIVES.items():
        hit = []
        for text in reps:
            p = pt(text)
            orb = next(o for o in orbits if p in o)
            assert len(orb) == size
            hit.append(id(orb))
        assert len(set(hit)) == len(reps)


def test_small_s3_examples():
    assert s3_orbit_profile([pt("[1:1:1]")]) == {1: 1}
    orbit = s3_orbits([pt("[1:0:0]"), pt("[0:1:0]"), pt("[0:0:1]")])
    assert [len(o) for o in orbit] == [3]
    with pytest.raises(ValueError):
        s3_orbits([pt("[1:0:0]")])


def test_lines_and_points_closed_under_permutation():
    cfg = elliptic_config()
    lines = set(cfg.lines)
    pts = set(cfg.triple_points)
    for sigma in S3:
        assert {permute_line(l, sigma) for l in lines} == lines
        assert {permute(p, sigma) for p in pts} == pts


def test_product_of_lines_is_in_symbolic_cube():
    cfg = elliptic_config()
    F = lines_product(cfg.table.curve.field, cfg.lines)
    assert F.degree == 18
    assert vanishes_to_order(F, cfg.triple_points, 3)


def test_no_planar_configuration_has_48_triple_points():
    assert no_planar_match(48, 100) == []


def test_fermat_curve_membership():
    curve = FermatCubic()
    assert curve.contains(curve.identity)
    assert all(curve.contains(p) for p in table().points())
