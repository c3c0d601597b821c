"""Stability, cancellativity and normality of equivalences.

Direct checks use the defining implications. The relation-product second oracle
composes binary relations in right record: (x, z) in (theta T) iff x theta y and
z = T y for some y. This is the only place where right record is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .autotopy import AutotopyGroup, autotopy_group
from .errors import SizeMismatch
from .nuclei import COMPONENTS, ComponentGroup, component_groups, garrison_nucleus, orbits
from .partition import Partition
from .perm import inverse
from .quasigroup import LEFT, MIDDLE, RIGHT, FiniteQuasigroup

MODES = ("left_stable", "right_stable", "middle_stable", "left_cancel", "right_cancel", "middle_cancel", "normal")
_NORMAL_PARTS = ("left_stable", "right_stable", "left_cancel", "right_cancel")
_KIND = {"left": LEFT, "right": RIGHT, "middle": MIDDLE}


def _maps_blocks(perm_images, lab) -> bool:
    """x theta y implies T x theta T y, given block labels."""
    first = {}
    for x, l in enumerate(lab):
        v = lab[perm_images[x]]
        if first.setdefault(l, v) != v:
            return False
    return True


def congruence_check(q: FiniteQuasigroup, p: Partition, mode: str) -> bool:
    if p.n != q.n:
        raise SizeMismatch(f"partition on {p.n} points, quasigroup of order {q.n}")
    if mode == "normal":
        return all(congruence_check(q, p, m) for m in _NORMAL_PARTS)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    side, kind = mode.split("_")
    lab = p.labels()
    trans = q.translations(_KIND[side])
    if kind == "stable":
        return all(_maps_blocks(T.images, lab) for T in trans)
    # cancellative: T x theta T y implies x theta y, i.e. T^-1 preserves theta
    return all(_maps_blocks(inverse(T).images, lab) for T in trans)


def _compose_rel(r1: frozenset, r2: frozenset) -> frozenset:
    """Right record: first r1, then r2."""
    by_src = {}
    for y, z in r2:
        by_src.setdefault(y, []).append(z)
    return frozenset((x, z) for x, y in r1 for z in by_src.get(y, ()))


def _graph(perm) -> frozenset:
    return frozenset(enumerate(perm.images))


@dataclass
class RelationProductReport:
    agree: dict = field(default_factory=dict)
    direct: dict = field(default_factory=dict)
    relational: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.agree.values())


def relation_product_check(q: FiniteQuasigroup, p: Partition) -> RelationProductReport:
    """theta T in T theta (for every T of a kind) iff stable; T theta in theta T iff cancellative."""
    theta = p.pairs()
    rep = RelationProductReport()
    for side in ("left", "right", "middle"):
        trans = q.translations(_KIND[side])
        graphs = [_graph(T) for T in trans]
        stable = all(_compose_rel(theta, g) <= _compose_rel(g, theta) for g in graphs)
        cancel = all(_compose_rel(g, theta) <= _compose_rel(theta, g) for g in graphs)
        for kind, val in (("stable", stable), ("cancel", cancel)):
            mode = f"{side}_{kind}"
            rep.relational[mode] = val
            rep.direct[mode] = congruence_check(q, p, mode)
            rep.agree[mode] = val == rep.direct[mode]
    return rep


def nucleus_equivalence(q: FiniteQuasigroup, component: ComponentGroup) -> Partition:
    return orbits(component.group)


def pairing_implications(q: FiniteQuasigroup, parts: dict) -> dict:
    """Evaluate the reciprocal-normality implications between paired nucleus equivalences.

    ``parts`` maps (position, side) to the Partition of that component group.
    Case k pairs a source and a target equivalence with a translation f_c:
    right multiplication for 1l/3l, left multiplication for 2r/3r, P_c or
    P_c^-1 for 1m/2m. The value says whether the implication holds for all a, b, c.
    """
    n = q.n
    t = q.table
    P = [q.middle(c).images for c in range(n)]
    Pi = [inverse(q.middle(c)).images for c in range(n)]
    lab = {k: v.labels() for k, v in parts.items()}
    r = range(n)

    def holds(src, dst, f_pre, f_post):
        # if f_pre(a) src f_pre(b) then f_post(a) dst f_post(b), for every c
        ls, ld = lab[src], lab[dst]
        for c in r:
            for a in r:
                for b in r:
                    if ls[f_pre(a, c)] == ls[f_pre(b, c)] and ld[f_post(a, c)] != ld[f_post(b, c)]:
                        return False
        return True

    ident = lambda a, c: a
    right_mul = lambda a, c: t[a][c]
    left_mul = lambda a, c: t[c][a]
    mid = lambda a, c: P[c][a]
    mid_inv = lambda a, c: Pi[c][a]
    l1, l3, r2, r3, m1, m2 = COMPONENTS
    cases = {
        1: (l1, l3, right_mul),
        2: (l3, l1, right_mul),
        3: (r2, r3, left_mul),
        4: (r3, r2, left_mul),
        5: (m1, m2, mid),
        6: (m2, m1, mid_inv),
    }
    out = {}
    for k, (x, y, fwd) in cases.items():
        # (a): a x b  =>  f(a) y f(b);  (b): f(a) x f(b)  =>  a y b
        out[f"case {k} (a)"] = holds(x, y, ident, fwd)
        out[f"case {k} (b)"] = holds(x, y, fwd, ident)
    return out


# implications that follow from the autotopy identities; the other six can fail
PROVEN_PAIRINGS = ("case 1 (a)", "case 2 (b)", "case 3 (a)", "case 4 (b)", "case 5 (a)", "case 6 (a)")


@dataclass
class NormalityReport:
    partitions: dict = field(default_factory=dict)
    modes: dict = field(default_factory=dict)
    coset_checks: dict = field(default_factory=dict)
    implications: dict = field(default_factory=dict)

    def garrison_normal(self, side: str) -> bool | None:
        entry = self.coset_checks.get(side)
        return None if entry is None else not entry["mismatches"]


def normality_report(q: FiniteQuasigroup, avt: AutotopyGroup | None = None) -> NormalityReport:
    if avt is None:
        avt = autotopy_group(q)
    groups = component_groups(q, avt)
    rep = NormalityReport()
    for key, g in groups.items():
        part = nucleus_equivalence(q, g)
        rep.partitions[key] = part
        rep.modes[key] = {m: congruence_check(q, part, m) for m in MODES}
    if q.is_loop():
        t = q.table
        for side in ("left", "right", "middle"):
            nuc = sorted(garrison_nucleus(q, side).elements)
            mismatches = []
            for a in range(q.n):
                left = sorted({t[a][x] for x in nuc})
                right = sorted({t[x][a] for x in nuc})
                if left != right:
                    mismatches.append((a, left, right))
            rep.coset_checks[side] = {"nucleus": nuc, "mismatches": mismatches}
    rep.implications = pairing_implications(q, rep.partitions)
    return rep
