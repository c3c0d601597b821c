"""A-centers, loop centers, group-isotope oracles and permutation identities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .autotopy import AutotopyGroup, autotopy_group
from .errors import NotALoop
from .isotopy import LOOP, Isotopy, lp_isotope
from .nuclei import (
    COMPONENT_POSITIONS,
    SIDES,
    CheckReport,
    a_nuclei,
    action_profile,
    component_groups,
    garrison_nucleus,
)
from .perm import Perm, PermGroup
from .quasigroup import LEFT, MIDDLE, RIGHT, FiniteQuasigroup

_COMPLEMENTS = {LEFT: (RIGHT, MIDDLE), RIGHT: (LEFT, MIDDLE), MIDDLE: (LEFT, RIGHT)}


@dataclass(frozen=True)
class ACenter:
    side: str
    elements: frozenset
    quasigroup: FiniteQuasigroup
    product_is_subgroup: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def component(self, position: int) -> PermGroup:
        return PermGroup(self.quasigroup.n, frozenset(t.component(position) for t in self.elements))

    def components(self) -> dict:
        return {pos: self.component(pos) for pos in COMPONENT_POSITIONS[self.side]}

    def is_group(self) -> bool:
        els = self.elements
        return Isotopy.identity(self.quasigroup.n) in els and all(a.then(b) in els for a in els for b in els)

    def is_abelian(self) -> bool:
        els = list(self.elements)
        return all(a.then(b) == b.then(a) for a in els for b in els)


def product_set(xs, ys) -> frozenset:
    return frozenset(a.then(b) for a in xs for b in ys)


def a_center(q: FiniteQuasigroup, side: str, avt: AutotopyGroup | None = None, nuclei: dict | None = None) -> ACenter:
    """The side's A-nucleus intersected with the product of the other two."""
    if nuclei is None:
        nuclei = a_nuclei(q, avt)
    s1, s2 = _COMPLEMENTS[side]
    prod = product_set(nuclei[s1].elements, nuclei[s2].elements)
    closed = all(a.then(b) in prod for a in prod for b in prod)
    return ACenter(side, prod & nuclei[side].elements, q, closed)


def a_centers(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> dict:
    nuclei = a_nuclei(q, avt)
    return {side: a_center(q, side, nuclei=nuclei) for side in SIDES}


def loop_center(q: FiniteQuasigroup) -> frozenset:
    if not q.is_loop():
        raise NotALoop("the loop centre needs a two-sided identity")
    t = q.table
    comm = {a for a in range(q.n) if all(t[a][x] == t[x][a] for x in range(q.n))}
    nuc = set(comm)
    for side in SIDES:
        nuc &= garrison_nucleus(q, side).elements
    return frozenset(nuc)


def is_group_isotope(q: FiniteQuasigroup, paranoid: bool = False) -> bool:
    """Probe one LP-isotope loop for associativity.

    A loop isotopic to a group is itself a group, and all LP-isotopes of q are
    isotopic to each other, so a single probe decides the question. ``paranoid``
    probes every (a, b) and raises if the answers differ.
    """
    if q.n == 0:
        return True
    verdict = lp_isotope(q, LOOP, 0, 0).is_associative()
    if paranoid:
        for a in range(q.n):
            for b in range(q.n):
                if lp_isotope(q, LOOP, a, b).is_associative() != verdict:
                    raise RuntimeError(f"LP-isotope probes disagree at a={a}, b={b}")
    return verdict


def is_abelian_group_isotope(q: FiniteQuasigroup, paranoid: bool = False) -> bool:
    if q.n == 0:
        return True
    loop = lp_isotope(q, LOOP, 0, 0)
    verdict = loop.is_associative() and loop.is_commutative()
    if paranoid:
        for a in range(q.n):
            for b in range(q.n):
                other = lp_isotope(q, LOOP, a, b)
                if (other.is_associative() and other.is_commutative()) != verdict:
                    raise RuntimeError(f"LP-isotope probes disagree at a={a}, b={b}")
    return verdict


def is_a_nuclear(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> bool:
    groups = component_groups(q, avt)
    return any(action_profile(g.group).transitive for g in groups.values())


def is_a_central(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> bool:
    centers = a_centers(q, avt)
    return any(
        action_profile(g).transitive for c in centers.values() for g in c.components().values()
    )


MEDIAL, PARAMEDIAL = "medial", "paramedial"
PERMUTATION_MEDIAL, PERMUTATION_PARAMEDIAL = "permutation_medial", "permutation_paramedial"


def identity_check(q: FiniteQuasigroup, identity: str, perms: Sequence[Perm] | None = None) -> bool:
    """Brute-force evaluation over all (x, y, u, v).

    medial:     a1(a2 x . a3 y) . a4(a5 u . a6 v) = a7(xu) . a8(yv)
    paramedial: a1(a2 x . a3 y) . a4(a5 u . a6 v) = a7(vy) . a8(ux)
    The plain identities are the all-identity case.
    """
    n = q.n
    if identity in (MEDIAL, PARAMEDIAL):
        perms = [Perm.identity(n)] * 8
        identity = PERMUTATION_MEDIAL if identity == MEDIAL else PERMUTATION_PARAMEDIAL
    if identity not in (PERMUTATION_MEDIAL, PERMUTATION_PARAMEDIAL):
        raise ValueError(f"unknown identity {identity!r}")
    if perms is None or len(perms) != 8:
        raise ValueError("permutation identities need eight permutations")
    a = [p.images for p in perms]
    t = q.table
    r = range(n)
    # left factor depends on (x, y), right factor on (u, v)
    left = [[a[0][t[a[1][x]][a[2][y]]] for y in r] for x in r]
    right = [[a[3][t[a[4][u]][a[5][v]]] for v in r] for u in r]
    medial = identity == PERMUTATION_MEDIAL
    for x in r:
        for y in r:
            lxy = t[left[x][y]]
            for u in r:
                for v in r:
                    lhs = lxy[right[u][v]]
                    if medial:
                        rhs = t[a[6][t[x][u]]][a[7][t[y][v]]]
                    else:
                        rhs = t[a[6][t[v][y]]][a[7][t[u][x]]]
                    if lhs != rhs:
                        return False
    return True


def identity_report(q: FiniteQuasigroup, identity: str, perms: Sequence[Perm] | None = None) -> CheckReport:
    """identity_check plus the abelian-group-isotope cross-check it implies."""
    rep = CheckReport()
    holds = identity_check(q, identity, perms)
    rep.details["holds"] = holds
    if holds:
        rep.checks["abelian group isotope"] = is_abelian_group_isotope(q)
    return rep


def semidirect_structure_check(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> CheckReport:
    if not q.is_loop():
        raise NotALoop("structure check is stated for loops")
    if avt is None:
        avt = autotopy_group(q)
    nuc = a_nuclei(q, avt)
    ident = Isotopy.identity(q.n)
    triv = frozenset([ident])
    aut = avt.automorphisms()
    rep = CheckReport()
    for s1, s2 in ((LEFT, RIGHT), (LEFT, MIDDLE), (RIGHT, MIDDLE)):
        a, b = nuc[s1].elements, nuc[s2].elements
        rep.checks[f"{s1} & {s2} nuclei meet trivially"] = a & b == triv
        prod = product_set(a, b)
        rep.checks[f"({s1}.{s2}) & Aut trivial"] = prod & aut == triv
        rep.checks[f"|{s1}|.|{s2}|.|Aut| divides |Avt|"] = avt.order % (len(a) * len(b) * len(aut)) == 0
    groups = component_groups(q, avt)
    for p, s1, s2 in ((1, LEFT, MIDDLE), (2, RIGHT, MIDDLE), (3, LEFT, RIGHT)):
        g1, g2 = groups[(p, s1)].group, groups[(p, s2)].group
        rep.checks[f"{p}N{s1[0]} commutes with {p}N{s2[0]}"] = all(m * v == v * m for m in g1 for v in g2)
    rep.details["orders"] = {
        "avt": avt.order,
        "aut": len(aut),
        **{s: nuc[s].order for s in SIDES},
    }
    return rep
