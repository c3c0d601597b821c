import itertools

import pytest
from hypothesis import given, settings

from anuclear.autotopy import autotopy_group
from anuclear.catalog import cyclic, elementary_abelian_2, klein, linear, random_latin_square, random_loop, symmetric3
from anuclear.centers import (
    MEDIAL,
    PARAMEDIAL,
    PERMUTATION_MEDIAL,
    PERMUTATION_PARAMEDIAL,
    a_center,
    a_centers,
    identity_check,
    identity_report,
    is_a_central,
    is_a_nuclear,
    is_abelian_group_isotope,
    is_group_isotope,
    loop_center,
    semidirect_structure_check,
)
from anuclear.errors import NotALoop
from anuclear.isotopy import Isotopy, apply_isotopy
from anuclear.nuclei import a_nuclei
from anuclear.perm import Perm, group_fingerprint, inverse
from anuclear.quasigroup import FiniteQuasigroup

from conftest import quasigroups, rand_isotopy, rand_perm


def test_center_examples(loop5):
    one = FiniteQuasigroup([[0]])
    assert all(c.order == 1 for c in a_centers(one).values())
    z3 = cyclic(3)
    assert a_center(z3, "left").elements == a_nuclei(z3)["left"].elements
    assert a_center(z3, "left").order == 3
    c5 = a_centers(loop5)
    assert all(c.order == 1 for c in c5.values())


def test_loop_center(loop6, loop5):
    assert loop_center(klein()) == set(range(4))
    assert loop_center(loop6) <= {0, 1}
    assert loop_center(loop5) == {0}
    with pytest.raises(NotALoop):
        loop_center(linear(5, 2, 3))


def test_group_isotope_examples(loop5):
    assert is_group_isotope(symmetric3())
    assert not is_group_isotope(loop5)
    assert 12 % 5 != 0  # no transitive component can live in |Avt| = 12
    assert is_group_isotope(linear(5, 2, 1))
    assert is_abelian_group_isotope(klein())
    assert is_abelian_group_isotope(linear(5, 2, 3))
    assert not is_abelian_group_isotope(symmetric3())


def test_verdict_examples(loop5, loop6):
    assert is_a_nuclear(cyclic(3))
    assert not is_a_nuclear(loop5)
    assert not is_a_nuclear(loop6)
    assert is_a_central(klein())
    assert not is_a_central(symmetric3())
    assert not is_a_central(loop6)


@settings(max_examples=15, deadline=None)
@given(quasigroups(max_n=5))
def test_paranoid_probe(q):
    assert is_group_isotope(q, paranoid=True) == is_group_isotope(q)
    assert is_abelian_group_isotope(q, paranoid=True) == is_abelian_group_isotope(q)


@settings(max_examples=30, deadline=None)
@given(quasigroups(max_n=6))
def test_verdict_agreement(q):
    avt = autotopy_group(q)
    assert is_a_nuclear(q, avt) == is_group_isotope(q)
    assert is_a_central(q, avt) == is_abelian_group_isotope(q)


def test_identity_examples(rng):
    q = linear(5, 2, 3)
    assert identity_check(q, MEDIAL)
    # ax + by is paramedial exactly when a^2 = b^2 mod p
    for p in (5, 7):
        for a, b in itertools.product(range(1, p), repeat=2):
            assert identity_check(linear(p, a, b), PARAMEDIAL) == ((a * a - b * b) % p == 0)
    for _ in range(5):
        r = random_latin_square(4, rng)
        e = [Perm.identity(4)] * 8
        assert identity_check(r, PERMUTATION_MEDIAL, e) == identity_check(r, MEDIAL)
        assert identity_check(r, PERMUTATION_PARAMEDIAL, e) == identity_check(r, PARAMEDIAL)


def test_permutation_medial_with_nontrivial_perms():
    # 2x + 3y mod 5 is medial; relabel it and carry the identity along
    q = linear(5, 2, 3)
    p = Perm([1, 3, 0, 4, 2])
    e = Perm.identity(5)
    r = apply_isotopy(q, Isotopy(p, p, p))
    assert identity_check(r, MEDIAL)
    rep = identity_report(q, PERMUTATION_MEDIAL, [e] * 8)
    assert rep.details["holds"] and rep.passed


def test_medial_brute_force_agrees(rng):
    for _ in range(10):
        q = random_latin_square(rng.randint(2, 4), rng)
        r = range(q.n)
        direct = all(
            q.mul(q.mul(x, y), q.mul(u, v)) == q.mul(q.mul(x, u), q.mul(y, v))
            for x, y, u, v in itertools.product(r, repeat=4)
        )
        assert identity_check(q, MEDIAL) == direct


def test_semidirect_examples(loop5):
    rep = semidirect_structure_check(loop5)
    assert rep.passed and rep.details["orders"]["avt"] == 12 and rep.details["orders"]["aut"] == 1
    z3 = semidirect_structure_check(cyclic(3))
    o = z3.details["orders"]
    assert z3.passed and o["left"] * o["right"] * o["aut"] == 18 == o["avt"]
    assert semidirect_structure_check(FiniteQuasigroup([[0]])).passed
    with pytest.raises(NotALoop):
        semidirect_structure_check(linear(5, 2, 3))


def test_center_invariants(rng):
    for _ in range(30):
        n = rng.randint(2, 6)
        base = rng.choice([random_loop(n, rng), apply_isotopy(cyclic(n), rand_isotopy(n, rng))])
        loop = base if base.is_loop() else random_loop(n, rng)
        e = loop.identity
        eps = Perm.identity(n)
        cs = a_centers(loop)
        orders = {c.order for c in cs.values()}
        orders |= {g.order for c in cs.values() for g in c.components().values()}
        assert len(orders) == 1
        assert len({group_fingerprint(g) for c in cs.values() for g in c.components().values()}) == 1
        assert all(c.is_abelian() and c.is_group() for c in cs.values())
        Z = loop_center(loop)
        assert {p(e) for p in cs["left"].component(1)} == Z
        for t in cs["left"].elements:
            a = t.alpha(e)
            assert a in Z and t == Isotopy(loop.left(a), eps, loop.left(a))
        for t in cs["middle"].elements:
            a = t.alpha(e)
            assert loop.left(a) == loop.right(a)
            assert t == Isotopy(loop.left(a), inverse(loop.left(a)), eps)
        t = rand_isotopy(n, rng)
        moved = a_centers(apply_isotopy(loop, t))
        assert {s: c.order for s, c in moved.items()} == {s: c.order for s, c in cs.items()}
        assert semidirect_structure_check(loop).passed


def test_z2_cubed_center():
    q = elementary_abelian_2(3)
    assert all(c.order == 8 for c in a_centers(q).values())
