import pytest
from hypothesis import assume, given, settings, strategies as st

from boroczky.exactfield import make_cyclotomic, parse_element
from boroczky.projplane import (
    DegenerateError,
    ProjLine,
    ProjPoint,
    collinear,
    concurrent,
    dedupe_projective,
    line_through,
    meet,
)

K = make_cyclotomic(12)


def P(*c):
    return ProjPoint([K(x) for x in c], K)


def L(*c):
    return ProjLine([K(x) for x in c], K)


def test_canonical_scaling():
    assert P(2, 4, 6) == P(1, 2, 3)
    assert P(0, 3, 0) == P(0, 1, 0)
    assert P(2, 4, 6).coords[0] == 1


def test_zero_vector_rejected():
    with pytest.raises(DegenerateError):
        P(0, 0, 0)


def test_line_through_axes():
    assert line_through(P(0, 0, 1), P(1, 0, 1)) == L(0, 1, 0)


def test_meet_of_parallel_lines_is_at_infinity():
    p = meet(L(0, 1, 0), L(0, 1, -1))
    assert p == P(1, 0, 0)
    assert not p.is_affine()


@pytest.mark.parametrize("fn, args", [
    (line_through, (P(1, 2, 3), P(2, 4, 6))),
    (meet, (L(1, 1, 1), L(2, 2, 2))),
])
def test_degenerate_inputs_raise(fn, args):
    with pytest.raises(DegenerateError):
        fn(*args)


def test_concurrent_and_collinear():
    assert concurrent(L(1, 0, 0), L(0, 1, 0), L(1, 1, 0))
    assert not concurrent(L(1, 0, 0), L(0, 1, 0), L(1, 1, 1))
    assert collinear(P(0, 0, 1), P(1, 1, 1), P(2, 2, 1))
    with pytest.raises(DegenerateError):
        concurrent(L(1, 0, 0), L(2, 0, 0), L(0, 1, 0))


def test_dedupe_keeps_first():
    items = [L(1, 2, 3), L(2, 4, 6), L(0, 0, 1), L(0, 0, 5)]
    assert dedupe_projective(items) == [L(1, 2, 3), L(0, 0, 1)]


def test_json_round_trip():
    z = K.gen("zeta")
    p = ProjPoint([z, z * z + 1, K(3)], K)
    assert ProjPoint.from_json(K, p.to_json()) == p
    l = ProjLine([K(1), -z, K(0)], K)
    assert ProjLine.from_json(K, l.to_json(4)) == l
    assert l.to_json(4)["index"] == 4
    assert parse_element(K, p.to_json()["coords"][1]) == p.coords[1]


small = st.integers(-4, 4)
triples = st.tuples(small, small, small).filter(lambda t: any(t))


@settings(max_examples=200, deadline=None)
@given(triples, triples)
def test_meet_lies_on_both_lines(a, b):
    l1, l2 = L(*a), L(*b)
    assume(l1 != l2)
    p = meet(l1, l2)
    assert l1.contains(p) and l2.contains(p)


@settings(max_examples=200, deadline=None)
@given(triples, triples)
def test_line_through_contains_points(a, b):
    p, q = P(*a), P(*b)
    assume(p != q)
    l = line_through(p, q)
    assert l.contains(p) and l.contains(q)
