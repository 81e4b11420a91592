from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from tri36 import numthy
from tri36.enumerate import all_vectors, proper_vectors
from tri36.errors import DomainError
from tri36.ivec import (
    IndexVector,
    check_vector,
    code,
    improper_form,
    is_akempic_arith,
    is_proper,
    mirror,
    orbit,
    s_minus,
    successor,
)


def proper_upto(limit):
    for n in range(1, limit + 1):
        yield from proper_vectors(n).proper


PROPER_200 = list(proper_upto(200))


def successor_with(v, a, b):
    """Successor computed from an arbitrary Farey neighbour a/b of s/m."""
    k, m, s = v
    d = a * m - b * s
    k2 = gcd(s, m)
    m2 = k * m // k2
    return IndexVector(k2, m2, ((b * k if d > 0 else -b * k) - k2) % m2)


@pytest.mark.parametrize(
    "v, expected",
    [((1, 1, 0), True), ((1, 6, 3), True), ((4, 1, 0), False), ((1, 5, 4), False), ((1, 5, 0), False)],
)
def test_is_proper(v, expected):
    assert is_proper(v, v[0] * v[1]) is expected


def test_improper_forms_named():
    assert improper_form((6, 1, 0)) == "(n,1,0)"
    assert improper_form((1, 6, 5)) == "(1,n,n-1)"
    assert improper_form((1, 6, 0)) == "(1,n,0)"
    assert improper_form((1, 6, 3)) is None
    with pytest.raises(DomainError):
        improper_form((1, 6, 3), 7)


@pytest.mark.parametrize("bad", [(0, 1, 0), (1, 0, 0), (1, 3, 3), (1, 3, -1), ("x", 1, 0), (1, 2)])
def test_check_vector_rejects(bad):
    with pytest.raises(DomainError):
        check_vector(bad)


@pytest.mark.parametrize("v, expected", [((1, 6, 3), 4), ((3, 2, 0), 1), ((2, 3, 1), 3), ((1, 1, 0), 1)])
def test_s_minus(v, expected):
    assert s_minus(v) == expected


def test_example_chain():
    assert successor((1, 6, 3)) == (3, 2, 0)
    assert successor((3, 2, 0)) == (2, 3, 1)
    assert successor((2, 3, 1)) == (1, 6, 3)
    assert successor((1, 3, 1)) == (1, 3, 1)


@pytest.mark.parametrize("v, expected", [((1, 6, 3), (1, 6, 2)), ((2, 2, 0), (2, 2, 0)), ((1, 7, 2), (1, 7, 4))])
def test_mirror(v, expected):
    assert mirror(v) == expected


def test_orbit_examples():
    assert orbit((1, 6, 3)).vectors == ((1, 6, 3), (3, 2, 0), (2, 3, 1))
    assert orbit((3, 2, 0)).vectors == ((1, 6, 3), (3, 2, 0), (2, 3, 1))
    assert orbit((1, 3, 1)).vectors == ((1, 3, 1),)
    assert orbit((2, 2, 0)).vectors == ((2, 2, 0),)


def test_code_examples():
    assert code((2, 2, 0)).as_set() == {(2, 2, 0)} and code((2, 2, 0)).order == 1
    c = code((1, 7, 2))
    assert c.as_set() == {(1, 7, 2), (1, 7, 4)} and c.order == 2 and not c.symmetric
    c = code((1, 4, 1))
    assert c.as_set() == {(1, 4, 1), (1, 4, 2), (2, 2, 1)} and c.order == 3 and c.symmetric


def test_akempic_examples():
    assert is_akempic_arith((1, 6, 3)) is False
    assert is_akempic_arith((1, 7, 2)) is True
    assert is_akempic_arith((1, 1, 0)) is True


def test_successor_independent_of_farey_neighbour():
    # both Farey neighbours of s/m give the same successor
    for v in proper_upto(60):
        k, m, s = v
        if s == 0:
            continue
        g = gcd(s, m)
        r = Fraction(s, m)
        den = m // g
        cands = [Fraction(a, b) for b in range(1, den + 1) for a in range(b + 1)]
        left = max(x for x in cands if x < r)
        right = min(x for x in cands if x > r)
        for nb in (left, right):
            assert successor_with(v, nb.numerator, nb.denominator) == successor(v), (v, nb)


def test_successor_period_and_product():
    for v in PROPER_200:
        w = successor(v)
        assert w.n == v.n
        assert successor(successor(w)) == v


def test_mirror_involution_and_code_closure():
    for v in PROPER_200:
        assert mirror(mirror(v)) == v
        c = code(v)
        assert len(c) in (1, 2, 3, 6)
        for w in c:
            assert successor(w) in c and mirror(w) in c


def test_akempic_gcd_matches_all_k_one():
    for v in PROPER_200:
        if v.k == 1:
            assert is_akempic_arith(v) == all(w.k == 1 for w in orbit(v)), v


def test_order_one_orbits_match_diophantine_solutions():
    for n in range(1, 121):
        fixed = {tuple(v) for v in proper_vectors(n).proper if len(orbit(v)) == 1}
        assert fixed == {tuple(v) for v in numthy.orbit1_vectors(n)}, n
        for k, m, s in fixed:
            z, x = m // k, s // k
            assert mirror((k, m, s)) == (k, k * z, k * (z - x - 1))


def test_code_order_one_forms():
    for v in PROPER_200:
        k, m, s = v
        assert (len(code(v)) == 1) == (v in {(k, k, 0), (k, 3 * k, k)}), v


def test_improper_vectors_form_successor_cycle():
    for n in range(2, 40):
        imp = [v for v in all_vectors(n) if not is_proper(v, n)]
        assert len(imp) == 3
        assert {successor(v) for v in imp} == set(imp)


@given(st.integers(1, 300).flatmap(lambda n: st.sampled_from(all_vectors(n))))
def test_orbit_is_successor_cycle(v):
    o = orbit(v)
    assert len(o) in (1, 3)
    assert o.vectors[0] == min(o.vectors)
    for i, w in enumerate(o.vectors):
        assert successor(w) == o.vectors[(i + 1) % len(o)]


def test_json_shapes():
    assert json.loads(json.dumps(orbit((1, 6, 3)).to_json())) == [[1, 6, 3], [3, 2, 0], [2, 3, 1]]
    assert IndexVector(1, 6, 3).to_json() == [1, 6, 3]
