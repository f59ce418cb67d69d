"""Acceptance criteria, one test per criterion.

Each test records a pass/fail line with its wall time; the lines are printed
as they finish and again in the terminal summary. Run standalone with
``python3 tests/test_acceptance.py``.
"""
import functools
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import test_exactfield
import test_fatpoints
import test_symmetry
from conftest import ACCEPTANCE_LINES, config_for, elliptic_config, report_for, scheme_for

from boroczky.configuration import (
    expected_points_on_line,
    points_on_line,
    triple_count_formula,
    verify_concurrency_criterion,
)
from boroczky.elliptic import TABLE_E6, elliptic_containment, generate_E6, s3_orbit_profile, table_mismatches
from boroczky.fatpoints import (
    alpha,
    containment_up_to_degree,
    containment_witness,
    lines_product,
    minimal_generators,
    symbolic_piece,
)
from boroczky.symmetry import degree_bound, orbit_count_formulas, orbit_decompose, orbit_profile, weighted_hilbert


def criterion(number, title, budget):
    """Time the test body, enforce the budget in seconds and record one summary line."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            status, note = "FAIL", ""
            try:
                note = fn(*args, **kwargs) or ""
                elapsed = time.perf_counter() - start
                assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
                status = "PASS"
            except BaseException as exc:
                note = f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
                raise
            finally:
                elapsed = time.perf_counter() - start
                line = f"[{status}] {number:>2}. {title} ({elapsed:.1f}s / {budget}s) {note}".rstrip()
                ACCEPTANCE_LINES.append(line)
                print(line)
        return run
    return wrap


@criterion(1, "triple point counts for n in 3..24", 60)
def test_triple_point_counts():
    bad = {n: report_for(n).count(3) for n in range(3, 25) if report_for(n).count(3) != triple_count_formula(n)}
    assert bad == {}


@criterion(2, "n = 12 headline", 120)
def test_b12_headline():
    c = config_for(12)
    B = report_for(12).triple_points
    assert len(B) == 19
    assert orbit_profile(orbit_decompose(B)) == {1: 1, 3: 4, 6: 1}
    S = scheme_for(12)
    assert alpha(S, 1) == 5
    gens = minimal_generators(S, 8)
    assert gens.generator_degrees == [5, 5, 5] and gens.complete
    piece = symbolic_piece(S, 3, 12)
    assert piece.dim == 1
    assert piece.forms(c.field)[0].is_scalar_multiple_of(lines_product(c.field, c.lines))
    v = containment_witness(c.lines, B, "boroczky:12")
    assert v.verdict == "NOT_CONTAINED"
    return v.verdict


@criterion(3, "concurrency iff n | i+j+k for even n in 8..18", 300)
def test_concurrency_criterion():
    for n in range(8, 19, 2):
        assert verify_concurrency_criterion(config_for(n)), n


@criterion(4, "points per line for even n in 8..24", 120)
def test_points_per_line():
    for n in range(8, 25, 2):
        c, rep = config_for(n), report_for(n)
        floor = n // 3 + (1 if n >= 14 else 0)
        for i in range(n):
            got = points_on_line(c, i, rep)
            assert got == expected_points_on_line(n, i), (n, i)
            assert got >= floor, (n, i)


@criterion(5, "orbit counts for n in 12, 18, 24", 180)
def test_orbit_formulas():
    for n in (12, 18, 24):
        B = report_for(n).triple_points
        prof = orbit_profile(orbit_decompose(B))
        o3, o6 = orbit_count_formulas(n)
        assert (prof.get(1), prof.get(3, 0), prof.get(6, 0)) == (1, o3, o6), n
        assert 1 + 3 * o3 + 6 * o6 == len(B) == triple_count_formula(n)


@criterion(6, "weighted Hilbert function for d in 0..200", 1)
def test_weighted_hilbert():
    for d in range(201):
        assert weighted_hilbert(d) == test_symmetry.brute_weighted(d), d


@criterion(7, "n/3 <= alpha <= degree bound for n in 12, 18", 600)
def test_degree_bounds():
    values = {}
    for n in (12, 18):
        a = alpha(scheme_for(n), 1)
        assert Fraction(n, 3) <= a <= degree_bound(n), n
        values[n] = a
    assert (12 // 3, values[12], degree_bound(12)) == (4, 5, 5)
    return f"alpha: {values}"


@criterion(8, "Waldschmidt sampling for n = 12, m <= 3", 300)
def test_waldschmidt_sampling():
    S = scheme_for(12)
    alphas = {m: alpha(S, m) for m in (1, 2, 3)}
    assert min(Fraction(a, m) for m, a in alphas.items()) == 4
    assert alphas[3] == 12
    return f"alpha(m): {alphas}"


@criterion(9, "n = 18 minimal generators", 1800)
def test_b18_generators():
    gens = minimal_generators(scheme_for(18), 13)
    assert gens.generator_degrees == [8, 8, 8, 9]
    assert gens.complete
    return f"complete through degree {gens.d_max}"


@criterion(10, "elliptic configuration", 900)
def test_elliptic_suite():
    T = generate_E6(check_table=False)
    assert table_mismatches(T) == [] and sum(len(r) for r in TABLE_E6) == 36
    cfg = elliptic_config()
    assert len(cfg.lines) == 18
    rep = cfg.incidence
    assert (rep.count_at_least(2), rep.count(3), rep.count_at_least(4)) == (57, 48, 0)
    assert not any(T.curve.contains(p) for p in cfg.triple_points)
    assert s3_orbit_profile(cfg.triple_points) == {1: 1, 2: 1, 3: 7, 6: 4}
    v = elliptic_containment(cfg, dim_check=True)
    assert v.in_symbolic3 and not v.in_square
    assert v.verdict == "NOT_CONTAINED"
    return f"{v.verdict}, generators {v.generators}, dim symbolic cube in degree 18 = {v.symbolic3_dim}"


@criterion(11, "n = 6 containment in degrees <= 12", 120)
def test_b6_containment():
    r = containment_up_to_degree(scheme_for(6), 12)
    assert r.holds and r.first_failure is None


PROPERTY_SUITES = [
    test_exactfield.test_inverse_round_trip_cyclotomic,
    test_exactfield.test_inverse_round_trip_fermat,
    test_exactfield.test_string_round_trip_property,
    test_exactfield.test_nullspace_multiply_back,
    test_fatpoints.test_chart_independence,
    test_symmetry.test_skew_invariance_examples,
    functools.partial(test_symmetry.test_product_of_lines_alternates, 12),
    functools.partial(test_symmetry.test_product_of_lines_alternates, 18),
    functools.partial(test_symmetry.test_orbit_constancy_of_u_and_v, 12),
    functools.partial(test_symmetry.test_orbit_constancy_of_u_and_v, 18),
]


@criterion(12, "property suites", 300)
def test_property_suites():
    for suite in PROPERTY_SUITES:
        suite()
    return f"{len(PROPERTY_SUITES)} suites"


if __name__ == "__main__":
    code = pytest.main([__file__, "-v", "-p", "no:cacheprovider"])
    sys.exit(code)
