"""Isotopies, isostrophies and LP-isotopes.

An isotopy T = (alpha, beta, gamma) sends q to the operation
x o y = gamma^-1(alpha x * beta y). Products are componentwise in left record,
and ``T.then(S)`` means "apply T, then S": apply(apply(q, T), S) = apply(q, T.then(S)).

An isostrophy (sigma, T) acts as parastrophe first, then isotopy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import DegreeMismatch, UnsupportedShape
from .perm import Perm, compose, inverse
from .quasigroup import (
    FiniteQuasigroup,
    Parastrophy,
    check_degree,
    parastrophe,
)


@dataclass(frozen=True, order=True)
class Isotopy:
    alpha: Perm
    beta: Perm
    gamma: Perm

    def __post_init__(self):
        d = self.alpha.degree
        for p in (self.beta, self.gamma):
            if p.degree != d:
                raise DegreeMismatch(d, p.degree)

    @classmethod
    def identity(cls, n: int) -> "Isotopy":
        e = Perm.identity(n)
        return cls(e, e, e)

    @property
    def degree(self) -> int:
        return self.alpha.degree

    def __iter__(self) -> Iterator[Perm]:
        return iter((self.alpha, self.beta, self.gamma))

    def __getitem__(self, i: int) -> Perm:
        """Zero-based component access."""
        return (self.alpha, self.beta, self.gamma)[i]

    def component(self, position: int) -> Perm:
        """One-based component access, matching the usual subscripts 1, 2, 3."""
        return self[position - 1]

    def then(self, other: "Isotopy") -> "Isotopy":
        return Isotopy(*(compose(a, b) for a, b in zip(self, other)))

    def __mul__(self, other: "Isotopy") -> "Isotopy":
        return self.then(other)

    def inverse(self) -> "Isotopy":
        return Isotopy(*(inverse(a) for a in self))

    def conjugate(self, t: "Isotopy") -> "Isotopy":
        """t^-1 self t, componentwise."""
        return Isotopy(*(compose(inverse(c), compose(a, c)) for a, c in zip(self, t)))

    def is_identity(self) -> bool:
        return all(p.is_identity() for p in self)

    def reindex(self, sigma: Parastrophy) -> "Isotopy":
        """The triple (alpha_{sigma 1}, alpha_{sigma 2}, alpha_{sigma 3})."""
        comps = tuple(self)
        return Isotopy(*(comps[sigma.perm[j]] for j in range(3)))

    def __str__(self) -> str:
        return "(" + ", ".join(p.cycle_string() for p in self) + ")"


def apply_isotopy(q: FiniteQuasigroup, t: Isotopy) -> FiniteQuasigroup:
    check_degree(q, *t)
    a, b = t.alpha.images, t.beta.images
    ginv = inverse(t.gamma).images
    tab = q.table
    return FiniteQuasigroup([[ginv[tab[a[x]][b[y]]] for y in range(q.n)] for x in range(q.n)])


@dataclass(frozen=True)
class Isostrophy:
    sigma: Parastrophy
    t: Isotopy

    @classmethod
    def identity(cls, n: int) -> "Isostrophy":
        return cls(Parastrophy.E, Isotopy.identity(n))

    @classmethod
    def from_relation_form(cls, sigma: Parastrophy, triple: Isotopy) -> "Isostrophy":
        """Isostrophy whose image holds (x1, x2, x3) exactly when q holds
        (a1 x_{s^-1 1}, a2 x_{s^-1 2}, a3 x_{s^-1 3}) for triple = (a1, a2, a3).

        That image is "isotopy by the triple, then sigma-parastrophe", which
        equals the parastrophe-first form with the triple reindexed by sigma.
        """
        return cls(sigma, triple.reindex(sigma))

    @property
    def degree(self) -> int:
        return self.t.degree

    def __str__(self) -> str:
        return f"({self.sigma}, {self.t})"


def apply_isostrophy(q: FiniteQuasigroup, s: Isostrophy) -> FiniteQuasigroup:
    check_degree(q, *s.t)
    return apply_isotopy(parastrophe(q, s.sigma), s.t)


def compose_isostrophy(s1: Isostrophy, s2: Isostrophy) -> Isostrophy:
    """Apply s1, then s2.

    (sigma, T)(tau, S) = (sigma tau, T^tau S) where T^tau reindexes T by tau,
    because the tau-parastrophe of an isotope by T is the isotope by T^tau
    of the tau-parastrophe.
    """
    if s1.degree != s2.degree:
        raise DegreeMismatch(s1.degree, s2.degree)
    return Isostrophy(s1.sigma * s2.sigma, s1.t.reindex(s2.sigma).then(s2.t))


def invert_isostrophy(s: Isostrophy) -> Isostrophy:
    sinv = s.sigma.inverse()
    return Isostrophy(sinv, s.t.reindex(sinv).inverse())


# LP-isotopes

LOOP, UNIPOTENT_RIGHT, UNIPOTENT_LEFT = "loop", "unipotent_right", "unipotent_left"
LP_KINDS = (LOOP, UNIPOTENT_RIGHT, UNIPOTENT_LEFT)


def lp_isotopy(q: FiniteQuasigroup, kind: str, a: int, b: int) -> Isotopy:
    e = Perm.identity(q.n)
    if kind == LOOP:
        return Isotopy(inverse(q.right(a)), inverse(q.left(b)), e)
    if kind == UNIPOTENT_RIGHT:
        return Isotopy(e, q.middle(a), q.right(b))
    if kind == UNIPOTENT_LEFT:
        return Isotopy(inverse(q.middle(a)), e, q.left(b))
    raise ValueError(f"unknown LP-isotope kind {kind!r}")


def lp_isotope(q: FiniteQuasigroup, kind: str, a: int, b: int) -> FiniteQuasigroup:
    if not (0 <= a < q.n and 0 <= b < q.n):
        raise ValueError("LP-isotope elements out of range")
    return apply_isotopy(q, lp_isotopy(q, kind, a, b))


# translation transport

@dataclass
class TransportReport:
    case: str
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _classify(q: FiniteQuasigroup, t: Isotopy) -> tuple:
    nontrivial = [i for i, p in enumerate(t) if not p.is_identity()]
    if not nontrivial:
        return ("identity", None, None)
    if len(nontrivial) == 1:
        return (("alpha", "beta", "gamma")[nontrivial[0]], None, None)
    for kind in LP_KINDS:
        for a in range(q.n):
            for b in range(q.n):
                if lp_isotopy(q, kind, a, b) == t:
                    return (kind, a, b)
    raise UnsupportedShape(f"isotopy {t} is neither one-component nor LP-shaped")


def transport_check(q: FiniteQuasigroup, t: Isotopy) -> TransportReport:
    """Compare the translations of apply_isotopy(q, t) against their closed forms."""
    check_degree(q, *t)
    case, a, b = _classify(q, t)
    r = apply_isotopy(q, t)
    al, be, ga = t
    inv = inverse
    L, R, P = q.left, q.right, q.middle
    rep = TransportReport(case)
    n = q.n
    if case == "identity":
        rep.checks["L"] = all(r.left(x) == L(x) for x in range(n))
        rep.checks["R"] = all(r.right(x) == R(x) for x in range(n))
        rep.checks["P"] = all(r.middle(x) == P(x) for x in range(n))
    elif case == "alpha":
        rep.checks["L_x = L_{alpha x}"] = all(r.left(x) == L(al(x)) for x in range(n))
        rep.checks["R_x = R_x alpha"] = all(r.right(x) == R(x) * al for x in range(n))
        rep.checks["P_x = P_x alpha"] = all(r.middle(x) == P(x) * al for x in range(n))
    elif case == "beta":
        rep.checks["L_x = L_x beta"] = all(r.left(x) == L(x) * be for x in range(n))
        rep.checks["R_x = R_{beta x}"] = all(r.right(x) == R(be(x)) for x in range(n))
        rep.checks["P_x^-1 = P_x^-1 beta"] = all(inv(r.middle(x)) == inv(P(x)) * be for x in range(n))
    elif case == "gamma":
        gi = inv(ga)
        rep.checks["L_x = gamma^-1 L_x"] = all(r.left(x) == gi * L(x) for x in range(n))
        rep.checks["R_x = gamma^-1 R_x"] = all(r.right(x) == gi * R(x) for x in range(n))
        rep.checks["P_x = P_{gamma x}"] = all(r.middle(x) == P(ga(x)) for x in range(n))
    elif case == LOOP:
        Ra_i, Lb_i = inv(R(a)), inv(L(b))
        rep.checks["L_x = L_{R_a^-1 x} L_b^-1"] = all(r.left(x) == L(Ra_i(x)) * Lb_i for x in range(n))
        rep.checks["R_y = R_{L_b^-1 y} R_a^-1"] = all(r.right(y) == R(Lb_i(y)) * Ra_i for y in range(n))
        rep.checks["P_z = L_b P_z R_a^-1"] = all(r.middle(z) == L(b) * P(z) * Ra_i for z in range(n))
        rep.checks["identity = b*a"] = r.identity == q.mul(b, a)
    elif case == UNIPOTENT_RIGHT:
        Pa, Rb_i = P(a), inv(R(b))
        rep.checks["L_x = R_b^-1 L_x P_a"] = all(r.left(x) == Rb_i * L(x) * Pa for x in range(n))
        rep.checks["R_y = R_b^-1 R_{P_a y}"] = all(r.right(y) == Rb_i * R(Pa(y)) for y in range(n))
        rep.checks["P_z = P_a^-1 P_{R_b z}"] = all(r.middle(z) == inv(Pa) * P(R(b)(z)) for z in range(n))
    elif case == UNIPOTENT_LEFT:
        Pa_i, Lb_i = inv(P(a)), inv(L(b))
        rep.checks["L_x = L_b^-1 L_{P_a^-1 x}"] = all(r.left(x) == Lb_i * L(Pa_i(x)) for x in range(n))
        rep.checks["R_y = L_b^-1 R_y P_a^-1"] = all(r.right(y) == Lb_i * R(y) * Pa_i for y in range(n))
        rep.checks["P_z = P_{b z} P_a^-1"] = all(r.middle(z) == P(q.mul(b, z)) * Pa_i for z in range(n))
    return rep
