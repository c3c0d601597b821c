"""A-nuclei, component groups, Garrison nuclei, orbits, centralizers and multiplication groups."""

from __future__ import annotations

from dataclasses import dataclass, field

from .autotopy import AutotopyGroup, autotopy_group
from .errors import CapExceeded, EpsilonPosition
from .isotopy import Isotopy
from .partition import Partition
from .perm import Perm, PermGroup, compose, generate_group, inverse, orbit_blocks, trivial_group
from .quasigroup import LEFT, MIDDLE, RIGHT, SIGMAS, FiniteQuasigroup, Parastrophy, parastrophe

SIDES = (LEFT, RIGHT, MIDDLE)
EPSILON_POSITION = {LEFT: 2, RIGHT: 1, MIDDLE: 3}
COMPONENT_POSITIONS = {LEFT: (1, 3), RIGHT: (2, 3), MIDDLE: (1, 2)}
# the six component groups, named by (position, side)
COMPONENTS = ((1, LEFT), (3, LEFT), (2, RIGHT), (3, RIGHT), (1, MIDDLE), (2, MIDDLE))


def component_name(position: int, side: str) -> str:
    return f"{position}N{side[0]}"


@dataclass(frozen=True)
class ANucleus:
    side: str
    elements: frozenset
    quasigroup: FiniteQuasigroup

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class ComponentGroup:
    side: str
    position: int
    group: PermGroup

    @property
    def name(self) -> str:
        return component_name(self.position, self.side)


@dataclass(frozen=True)
class GarrisonNucleus:
    side: str
    elements: frozenset


def a_nucleus(q: FiniteQuasigroup, side: str, avt: AutotopyGroup | None = None) -> ANucleus:
    if avt is None:
        avt = autotopy_group(q)
    k = EPSILON_POSITION[side]
    return ANucleus(side, frozenset(t for t in avt.elements if t.component(k).is_identity()), q)


def a_nuclei(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> dict:
    if avt is None:
        avt = autotopy_group(q)
    return {side: a_nucleus(q, side, avt) for side in SIDES}


def component_group(nuc: ANucleus, position: int) -> ComponentGroup:
    if position == EPSILON_POSITION[nuc.side] or position not in (1, 2, 3):
        raise EpsilonPosition(f"position {position} is fixed to the identity in the {nuc.side} A-nucleus")
    g = PermGroup(nuc.quasigroup.n, frozenset(t.component(position) for t in nuc.elements))
    return ComponentGroup(nuc.side, position, g)


def component_groups(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> dict:
    """All six component groups keyed by (position, side)."""
    nuc = a_nuclei(q, avt)
    return {(pos, side): component_group(nuc[side], pos) for pos, side in COMPONENTS}


def garrison_nucleus(q: FiniteQuasigroup, side: str) -> GarrisonNucleus:
    t = q.table
    r = range(q.n)
    if side == LEFT:
        test = lambda a: all(t[t[a][x]][y] == t[a][t[x][y]] for x in r for y in r)
    elif side == RIGHT:
        test = lambda a: all(t[t[x][y]][a] == t[x][t[y][a]] for x in r for y in r)
    elif side == MIDDLE:
        test = lambda a: all(t[t[x][a]][y] == t[x][t[a][y]] for x in r for y in r)
    else:
        raise ValueError(side)
    return GarrisonNucleus(side, frozenset(a for a in r if test(a)))


def orbits(g: PermGroup) -> Partition:
    return Partition.of(g.degree, orbit_blocks(g.elements, g.degree))


@dataclass(frozen=True)
class ActionProfile:
    free: bool
    transitive: bool
    orbit_sizes: tuple


def action_profile(g: PermGroup) -> ActionProfile:
    free = all(p.is_identity() or not p.fixed_points() for p in g.elements)
    blocks = orbit_blocks(g.elements, g.degree)
    return ActionProfile(free, len(blocks) == 1, tuple(sorted(len(b) for b in blocks)))


def translation_centralizer(q: FiniteQuasigroup, kind: str) -> PermGroup:
    """Permutations commuting with every translation of one kind.

    The translations of a kind act transitively, so psi is pinned by psi(0):
    psi(T 0) = T psi(0) for every translation T.
    """
    n = q.n
    if n == 0:
        return trivial_group(0)
    trans = q.translations(kind)
    out = set()
    for c in range(n):
        img = [-1] * n
        ok = True
        for T in trans:
            x, v = T(0), T(c)
            if img[x] == -1:
                img[x] = v
            elif img[x] != v:
                ok = False
                break
        if not ok or -1 in img or len(set(img)) != n:
            continue
        psi = Perm._trusted(tuple(img))
        if all(compose(psi, T) == compose(T, psi) for T in trans):
            out.add(psi)
    return PermGroup(n, frozenset(out))


@dataclass
class MultiplicationGroups:
    groups: dict = field(default_factory=dict)
    skipped: tuple = ()

    def __getitem__(self, name: str) -> PermGroup:
        return self.groups[name]


def multiplication_groups(q: FiniteQuasigroup, cap: int | None = None) -> MultiplicationGroups:
    if cap is not None and cap < q.n:
        raise ValueError("cap must be at least n")
    gens = {
        "LM": q.translations(LEFT),
        "RM": q.translations(RIGHT),
        "PM": q.translations(MIDDLE),
    }
    gens["M"] = gens["LM"] + gens["RM"]
    gens["FM"] = gens["M"] + gens["PM"]
    out = MultiplicationGroups()
    skipped = []
    for name, g in gens.items():
        try:
            out.groups[name] = generate_group(g, cap=cap, degree=q.n)
        except CapExceeded:
            skipped.append(name)
    out.skipped = tuple(skipped)
    return out


# Component group of the isostrophe (sigma, T) of q as a conjugate of a component
# group of q: COMPONENT_TRANSPORT[target][sigma] = source, conjugated by T's
# component at the target position. Columns: e, (12), (13), (23), (132), (123).
_T3_COLS = (Parastrophy.E, Parastrophy.S12, Parastrophy.S13, Parastrophy.S23, Parastrophy.S132, Parastrophy.S123)
_T3_ROWS = {
    (1, LEFT): ((1, LEFT), (2, RIGHT), (3, LEFT), (1, MIDDLE), (3, RIGHT), (2, MIDDLE)),
    (3, LEFT): ((3, LEFT), (3, RIGHT), (1, LEFT), (2, MIDDLE), (2, RIGHT), (1, MIDDLE)),
    (2, RIGHT): ((2, RIGHT), (1, LEFT), (2, MIDDLE), (3, RIGHT), (1, MIDDLE), (3, LEFT)),
    (3, RIGHT): ((3, RIGHT), (3, LEFT), (1, MIDDLE), (2, RIGHT), (2, MIDDLE), (1, LEFT)),
    (1, MIDDLE): ((1, MIDDLE), (2, MIDDLE), (3, RIGHT), (1, LEFT), (3, LEFT), (2, RIGHT)),
    (2, MIDDLE): ((2, MIDDLE), (1, MIDDLE), (2, RIGHT), (3, LEFT), (1, LEFT), (3, RIGHT)),
}
COMPONENT_TRANSPORT = {row: dict(zip(_T3_COLS, cells)) for row, cells in _T3_ROWS.items()}


def predicted_components(groups: dict, sigma: Parastrophy, t: Isotopy) -> dict:
    """Component groups of apply_isostrophy(q, (sigma, t)) from those of q."""
    out = {}
    for target, row in COMPONENT_TRANSPORT.items():
        c = t.component(target[0])
        out[target] = groups[row[sigma]].group.conjugate(c)
    return out


@dataclass
class CheckReport:
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def nucleus_isomorphism_check(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> CheckReport:
    if avt is None:
        avt = autotopy_group(q)
    nuc = a_nuclei(q, avt)
    n = q.n
    R, L, P = q.right, q.left, q.middle
    rep = CheckReport()
    rep.checks["left: gamma = R_c alpha R_c^-1"] = all(
        t.gamma == R(c) * t.alpha * inverse(R(c)) for t in nuc[LEFT].elements for c in range(n)
    )
    rep.checks["right: gamma = L_c beta L_c^-1"] = all(
        t.gamma == L(c) * t.beta * inverse(L(c)) for t in nuc[RIGHT].elements for c in range(n)
    )
    rep.checks["middle: beta = P_c alpha P_c^-1"] = all(
        t.beta == P(c) * t.alpha * inverse(P(c)) for t in nuc[MIDDLE].elements for c in range(n)
    )
    groups = {k: component_group(nuc[k[1]], k[0]) for k in COMPONENTS}
    ident = Isotopy.identity(n)
    for sigma in SIGMAS[1:]:
        qs = parastrophe(q, sigma)
        actual = component_groups(qs)
        predicted = predicted_components(groups, sigma, ident)
        rep.checks[f"parastrophe {sigma}: components transported"] = all(
            actual[k].group == predicted[k] for k in COMPONENTS
        )
    rep.checks["component orders match nucleus orders"] = all(
        groups[(pos, side)].group.order == nuc[side].order for pos, side in COMPONENTS
    )
    rep.details["orders"] = {s: nuc[s].order for s in SIDES}
    return rep
