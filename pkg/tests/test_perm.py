import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anuclear.errors import CapExceeded, DegreeMismatch
from anuclear.perm import (
    Perm,
    PermGroup,
    compose,
    conjugate,
    generate_group,
    group_fingerprint,
    inverse,
    is_alternating_a4,
    orbit_blocks,
)
from anuclear.catalog import order6_loop

from conftest import closure_oracle, perms


def test_compose_is_left_record():
    p = Perm([1, 2, 0])
    q = Perm([0, 2, 1])
    assert compose(p, q).images == tuple(p(q(x)) for x in range(3))


def test_compose_examples():
    e = Perm.identity(6)
    a = Perm.parse("(0 1)(2 4)(3 5)", 6)
    b = Perm.parse("(0 1)(2 3)(4 5)", 6)
    assert compose(e, a) == a
    t = Perm.parse("(0 1)", 2)
    assert compose(t, t) == Perm.identity(2)
    assert compose(a, b).images == (0, 1, 5, 4, 3, 2)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Perm.identity(2), Perm.identity(3))


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_parse_forms():
    assert Perm.parse("1,0,4,5,2,3") == Perm.parse("(0 1)(2 4)(3 5)", 6)
    assert Perm.parse("e", 4) == Perm.identity(4)
    assert Perm.parse("()", 3).is_identity()
    assert str(Perm.parse("(0 2)", 3)) == "2,1,0"
    with pytest.raises(ValueError):
        Perm.parse("e")


def test_cycles_and_order():
    p = Perm.parse("(0 1 2)(3 4)", 6)
    assert p.order() == 6
    assert p.fixed_points() == [5]
    assert Perm.from_cycles(p.cycles(), 6) == p


@given(perms(n=6), perms(n=6), perms(n=6))
def test_associativity(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms())
def test_inverse(p):
    e = Perm.identity(p.degree)
    assert compose(p, inverse(p)) == e == compose(inverse(p), p)
    assert sorted(p.images) == list(range(p.degree))


@given(perms(n=5), perms(n=5))
def test_conjugate_definition(p, by):
    assert conjugate(p, by) == inverse(by) * p * by


def test_generate_examples():
    assert generate_group([Perm.identity(3)]).elements == {Perm.identity(3)}
    c3 = generate_group([Perm.parse("(0 1 2)", 3)])
    assert c3.order == 3 and c3.is_abelian()


def test_generate_left_translations_of_loop6():
    q = order6_loop()
    lm = generate_group(q.translations("left"))
    assert lm.elements == closure_oracle(q.translations("left"), 6)
    assert lm.order == 48  # frozen from the fixpoint oracle


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(perms(n=n), min_size=1, max_size=3)))
def test_generated_groups_are_groups(gens):
    g = generate_group(gens)
    n = gens[0].degree
    assert g.is_group()
    assert all(p.degree == n for p in g)
    assert math.factorial(n) % g.order == 0


def test_cap():
    with pytest.raises(CapExceeded):
        generate_group([Perm.parse("(0 1 2 3)", 4)], cap=3)


def test_fingerprints():
    fp = group_fingerprint(PermGroup(3, frozenset([Perm.identity(3)])))
    assert fp == (1, True, ((1, 1),))
    fp3 = group_fingerprint(generate_group([Perm.parse("(0 1 2)", 3)]))
    assert fp3.order == 3 and fp3.abelian and fp3.order_counts() == {1: 1, 3: 2}
    a4 = generate_group([Perm.parse("(0 1 2)", 4), Perm.parse("(0 1)(2 3)", 4)])
    assert is_alternating_a4(group_fingerprint(a4))
    d6 = generate_group([Perm.parse("(0 1 2 3 4 5)", 6), Perm.parse("(1 5)(2 4)", 6)])
    assert d6.order == 12 and not is_alternating_a4(group_fingerprint(d6))


def test_orbit_blocks():
    assert orbit_blocks([Perm.parse("(0 2)(3 4)", 5)], 5) == [[0, 2], [1], [3, 4]]
