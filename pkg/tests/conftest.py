import random

import pytest
from hypothesis import strategies as st

from anuclear.catalog import order5_loop, order6_loop, random_latin_square
from anuclear.isotopy import Isotopy
from anuclear.perm import Perm


def rand_perm(n: int, rng: random.Random) -> Perm:
    images = list(range(n))
    rng.shuffle(images)
    return Perm(images)


def rand_isotopy(n: int, rng: random.Random) -> Isotopy:
    return Isotopy(rand_perm(n, rng), rand_perm(n, rng), rand_perm(n, rng))


def closure_oracle(gens, n):
    # naive fixpoint over products of all pairs
    seen = {Perm.identity(n)} | set(gens)
    while True:
        new = {a * b for a in seen for b in seen} - seen
        if not new:
            return seen
        seen |= new


@st.composite
def perms(draw, min_n=1, max_n=7, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    return Perm(draw(st.permutations(range(n))))


@st.composite
def quasigroups(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_latin_square(n, random.Random(seed))


@st.composite
def quasigroup_and_isotopy(draw, min_n=1, max_n=5):
    q = draw(quasigroups(min_n, max_n))
    t = Isotopy(*(draw(perms(n=q.n)) for _ in range(3)))
    return q, t


@pytest.fixture
def loop6():
    return order6_loop()


@pytest.fixture
def loop5():
    return order5_loop()


@pytest.fixture
def rng():
    return random.Random(20240611)


def transport_triple(sigma, triple, t):
    """Relation-form triple fixing q, moved to the isotope of q by t."""
    from anuclear.isotopy import Isostrophy, compose_isostrophy, invert_isostrophy
    from anuclear.quasigroup import Parastrophy

    T = Isostrophy(Parastrophy.E, t)
    s = Isostrophy.from_relation_form(sigma, triple)
    moved = compose_isostrophy(compose_isostrophy(invert_isostrophy(T), s), T)
    return moved.t.reindex(sigma.inverse())


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
