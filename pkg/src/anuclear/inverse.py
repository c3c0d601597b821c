"""Inverse-property witnesses, their autostrophies, detection and nucleus coincidences.

Families and defining identities (for all x, y):

    lambda  l1 x . l2(x y) = l3 y
    rho     r1(x y) . r2 y = r3 x
    mu      m1 y . m2 x = m3(x y)
    abc     a(x y) . b x = c y
    rst     J^r(x y) . J^s x = J^t y
    m       J^m(x y) . J^(m+1) x = J^m y
    wip     J(x y) . x = J y
    ci      (x y) . J x = y
    lip     l x . (x y) = y
    rip     (x y) . r y = x
    ip      lip and rip together
    ts      x y = y x and x . x y = y

Each identity says that q is fixed by an isostrophy. In relation form, the
triple (t1, t2, t3) under sigma holds (x1, x2, x3) exactly when q holds
(t1 x_{s^-1 1}, t2 x_{s^-1 2}, t3 x_{s^-1 3}).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .autotopy import AutotopyGroup, autotopy_group
from .congruence import normality_report
from .errors import DegreeMismatch, NotALoop, WitnessInvalid
from .isotopy import Isostrophy, Isotopy, apply_isostrophy, invert_isostrophy
from .nuclei import CheckReport, component_groups, garrison_nucleus, predicted_components
from .perm import Perm, compose, inverse
from .quasigroup import LEFT, MIDDLE, RIGHT, FiniteQuasigroup, Parastrophy, check_degree

FAMILIES = ("lambda", "rho", "mu", "abc", "rst", "m_inverse", "wip", "ci", "lip", "rip", "ip", "ts")
_ARITY = {"lambda": 3, "rho": 3, "mu": 3, "abc": 3, "rst": 1, "m_inverse": 1, "wip": 1, "ci": 1, "lip": 1, "rip": 1, "ip": 2, "ts": 0}


@dataclass(frozen=True)
class InverseWitness:
    family: str
    perms: tuple = ()
    exponents: tuple = ()  # (r, s, t) for rst, (m,) for m_inverse

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.perms) != _ARITY[self.family]:
            raise ValueError(f"{self.family} needs {_ARITY[self.family]} permutations")
        need = {"rst": 3, "m_inverse": 1}.get(self.family, 0)
        if len(self.exponents) != need:
            raise ValueError(f"{self.family} needs {need} exponents")
        if len({p.degree for p in self.perms}) > 1:
            raise DegreeMismatch(self.perms[0].degree, self.perms[-1].degree)


def _pow(J: Perm, k: int, memo: dict) -> Perm:
    if k not in memo:
        memo[k] = J ** k
    return memo[k]


def abc_triple(w: InverseWitness, n: int) -> Isotopy | None:
    """(alpha, beta, gamma) for the families that are special cases of abc."""
    e = Perm.identity(n)
    if w.family == "abc":
        return Isotopy(*w.perms)
    if w.family in ("rst", "m_inverse"):
        J, memo = w.perms[0], {}
        if w.family == "rst":
            r, s, t = w.exponents
        else:
            (m,) = w.exponents
            r, s, t = m, m + 1, m
        return Isotopy(_pow(J, r, memo), _pow(J, s, memo), _pow(J, t, memo))
    if w.family == "wip":
        return Isotopy(w.perms[0], e, w.perms[0])
    if w.family == "ci":
        return Isotopy(e, w.perms[0], e)
    return None


def relation_forms(w: InverseWitness, n: int) -> list:
    """The (sigma, triple) relation-form autostrophies that together encode w."""
    e = Perm.identity(n)
    f = w.family
    if f == "lambda":
        return [(Parastrophy.S23, Isotopy(*w.perms))]
    if f == "rho":
        return [(Parastrophy.S13, Isotopy(*w.perms))]
    if f == "mu":
        return [(Parastrophy.S12, Isotopy(*w.perms))]
    if f == "lip":
        return [(Parastrophy.S23, Isotopy(w.perms[0], e, e))]
    if f == "rip":
        return [(Parastrophy.S13, Isotopy(e, w.perms[0], e))]
    if f == "ip":
        return [(Parastrophy.S23, Isotopy(w.perms[0], e, e)), (Parastrophy.S13, Isotopy(e, w.perms[1], e))]
    if f == "ts":
        ident = Isotopy.identity(n)
        return [(Parastrophy.S12, ident), (Parastrophy.S23, ident)]
    return [(Parastrophy.S123, abc_triple(w, n))]


def autostrophies(w: InverseWitness, n: int) -> list:
    """The witness's autostrophies in parastrophe-then-isotopy form."""
    return [Isostrophy.from_relation_form(s, t) for s, t in relation_forms(w, n)]


def check_witness(q: FiniteQuasigroup, w: InverseWitness) -> bool:
    """Evaluate the family's defining identity directly."""
    check_degree(q, *w.perms)
    t = q.table
    r = range(q.n)
    f = w.family
    if f == "ts":
        return all(t[x][y] == t[y][x] and t[x][t[x][y]] == y for x in r for y in r)
    if f == "ip":
        return check_witness(q, InverseWitness("lip", w.perms[:1])) and check_witness(q, InverseWitness("rip", w.perms[1:]))
    if f == "lambda" or f == "lip":
        l1, l2, l3 = w.perms if f == "lambda" else (w.perms[0], Perm.identity(q.n), Perm.identity(q.n))
        return all(t[l1(x)][l2(t[x][y])] == l3(y) for x in r for y in r)
    if f == "rho" or f == "rip":
        r1, r2, r3 = w.perms if f == "rho" else (Perm.identity(q.n), w.perms[0], Perm.identity(q.n))
        return all(t[r1(t[x][y])][r2(y)] == r3(x) for x in r for y in r)
    if f == "mu":
        m1, m2, m3 = w.perms
        return all(t[m1(y)][m2(x)] == m3(t[x][y]) for x in r for y in r)
    a, b, c = abc_triple(w, q.n)
    return all(t[a(t[x][y])][b(x)] == c(y) for x in r for y in r)


def autostrophy_bridge(q: FiniteQuasigroup, w: InverseWitness) -> bool:
    check_degree(q, *w.perms)
    return all(apply_isostrophy(q, s) == q for s in autostrophies(w, q.n))


# detection

def _need_loop(q: FiniteQuasigroup, family: str) -> int:
    if not q.is_loop():
        raise NotALoop(f"{family} detection needs a loop")
    return q.identity


def _detect_lip(q):
    n = q.n
    index = {L: x for x, L in enumerate(q.translations(LEFT))}
    lam = [index.get(inverse(q.left(x))) for x in range(n)]
    if None in lam or len(set(lam)) != n:
        return None
    w = InverseWitness("lip", (Perm(lam),))
    return w if check_witness(q, w) else None


def _detect_rip(q):
    n = q.n
    index = {R: x for x, R in enumerate(q.translations(RIGHT))}
    rho = [index.get(inverse(q.right(x))) for x in range(n)]
    if None in rho or len(set(rho)) != n:
        return None
    w = InverseWitness("rip", (Perm(rho),))
    return w if check_witness(q, w) else None


def detect_special(q: FiniteQuasigroup, family: str) -> InverseWitness | None:
    """Canonical-witness detection; returns None when the property is absent."""
    n = q.n
    if family == "lip":
        return _detect_lip(q)
    if family == "rip":
        return _detect_rip(q)
    if family == "ip":
        a, b = _detect_lip(q), _detect_rip(q)
        return InverseWitness("ip", (a.perms[0], b.perms[0])) if a and b else None
    if family == "ts":
        w = InverseWitness("ts")
        return w if check_witness(q, w) else None
    if family == "ci":
        e = _need_loop(q, family)
        # y = 1 forces x . J x = 1
        J = [q.ldiv[x][e] for x in range(n)]
        w = InverseWitness("ci", (Perm(J),))
        return w if check_witness(q, w) else None
    if family == "wip":
        _need_loop(q, family)
        # y = 1 forces J x . x = J 1, so J is pinned by J(1)
        for c in range(n):
            J = [q.rdiv[c][x] for x in range(n)]
            if len(set(J)) != n:
                continue
            w = InverseWitness("wip", (Perm(J),))
            if check_witness(q, w):
                return w
        return None
    raise ValueError(f"no canonical detection for {family!r}")


# nucleus coincidences

_KEYS = {"1l": (1, LEFT), "3l": (3, LEFT), "2r": (2, RIGHT), "3r": (3, RIGHT), "1m": (1, MIDDLE), "2m": (2, MIDDLE)}


def _conj(group, p: Perm):
    """p^-1 G p."""
    return group.conjugate(p)


def _stated_relations(w: InverseWitness, G: dict, n: int) -> dict:
    """Component-group relations as listed for each family, evaluated as equalities."""
    out = {}
    g = lambda k: G[_KEYS[k]].group
    inv = inverse
    trip = abc_triple(w, n)
    if trip is not None:
        a, b, c = trip
        rel = {
            "1l = a^-1 3r a": (g("1l"), _conj(g("3r"), a)),
            "1l = b 2m b^-1": (g("1l"), _conj(g("2m"), inv(b))),
            "3l = c^-1 2r c": (g("3l"), _conj(g("2r"), c)),
            "3l = a 1m a^-1": (g("3l"), _conj(g("1m"), inv(a))),
            "2r = b^-1 1m b": (g("2r"), _conj(g("1m"), b)),
            "2r = c 3l c^-1": (g("2r"), _conj(g("3l"), inv(c))),
            "3r = c^-1 2m c": (g("3r"), _conj(g("2m"), c)),
            "3r = a 1l a^-1": (g("3r"), _conj(g("1l"), inv(a))),
            "1m = a^-1 3l a": (g("1m"), _conj(g("3l"), a)),
            "1m = b 2r b^-1": (g("1m"), _conj(g("2r"), inv(b))),
            "2m = b^-1 1l b": (g("2m"), _conj(g("1l"), b)),
            "2m = c 3r c^-1": (g("2m"), _conj(g("3r"), inv(c))),
        }
    elif w.family == "lambda":
        l1, l2, l3 = w.perms
        rel = {
            "1l = l1^-1 1m l1": (g("1l"), _conj(g("1m"), l1)),
            "1l = l1 1m l1^-1": (g("1l"), _conj(g("1m"), inv(l1))),
            "3l = l3^-1 2m l3": (g("3l"), _conj(g("2m"), l3)),
            "3l = l2 2m l2^-1": (g("3l"), _conj(g("2m"), inv(l2))),
            "2r = l2^-1 3r l2": (g("2r"), _conj(g("3r"), l2)),
            "2r = l3 3r l3^-1": (g("2r"), _conj(g("3r"), inv(l3))),
        }
    elif w.family == "rho":
        r1, r2, r3 = w.perms
        rel = {
            "1l = r1^-1 3l r1": (g("1l"), _conj(g("3l"), r1)),
            "1l = r3 3l r3^-1": (g("1l"), _conj(g("3l"), inv(r3))),
            "2r = r2^-1 2m r2": (g("2r"), _conj(g("2m"), r2)),
            "2r = r2 2m r2^-1": (g("2r"), _conj(g("2m"), inv(r2))),
            "3r = r3^-1 1m r3": (g("3r"), _conj(g("1m"), r3)),
            "3r = r1 1m r1^-1": (g("3r"), _conj(g("1m"), inv(r1))),
        }
    elif w.family == "mu":
        m1, m2, m3 = w.perms
        rel = {
            "1l = m1^-1 2r m1": (g("1l"), _conj(g("2r"), m1)),
            "1l = m2 2r m2^-1": (g("1l"), _conj(g("2r"), inv(m2))),
            "3l = m3^-1 3r m3": (g("3l"), _conj(g("3r"), m3)),
            "3l = m3 3r m3^-1": (g("3l"), _conj(g("3r"), inv(m3))),
            "1m = m1^-1 2m m1": (g("1m"), _conj(g("2m"), m1)),
            "1m = m2 2m m2^-1": (g("1m"), _conj(g("2m"), inv(m2))),
        }
    elif w.family == "lip":
        (lam,) = w.perms
        rel = {
            "1l = l 1m l": (g("1l"), _conj(g("1m"), lam)),
            "l^2 = e": (lam * lam, Perm.identity(n)),
            "3l = 2m": (g("3l"), g("2m")),
            "2r = 3r": (g("2r"), g("3r")),
        }
    elif w.family == "rip":
        (rho,) = w.perms
        rel = {
            "2r = r 2m r": (g("2r"), _conj(g("2m"), rho)),
            "r^2 = e": (rho * rho, Perm.identity(n)),
            "1l = 3l": (g("1l"), g("3l")),
            "1m = 3r": (g("1m"), g("3r")),
        }
    elif w.family == "ip":
        lam, rho = w.perms
        rel = {
            "l^2 = e": (lam * lam, Perm.identity(n)),
            "r^2 = e": (rho * rho, Perm.identity(n)),
            "1l = 3l": (g("1l"), g("3l")),
            "3l = 2m": (g("3l"), g("2m")),
            "1m = 2r": (g("1m"), g("2r")),
            "2r = 3r": (g("2r"), g("3r")),
        }
    else:  # ts
        rel = {f"1l = {k}": (g("1l"), g(k)) for k in ("3l", "2r", "3r", "1m", "2m")}
    return {name: lhs == rhs for name, (lhs, rhs) in rel.items()}


def _loop_claims(w: InverseWitness, n: int) -> tuple:
    """(component groups claimed equal, Garrison nuclei claimed equal, claimed normal) for loops."""
    e = Perm.identity(n)
    all6 = ("1l", "3l", "2r", "3r", "1m", "2m")
    f = w.family
    if f == "ci":
        return [all6], True, True
    if f == "wip":
        return [("1l", "3l", "2m"), ("2r", "3r", "1m")], True, False
    trip = abc_triple(w, n)
    if trip is None:
        return [], False, False
    a, b, c = trip
    if f == "m_inverse":
        return [], None, False  # handled separately: needs J = I_r
    if a == e:
        return [("1l", "3l", "2r", "3r", "1m")], True, True
    if b == e:
        return [("1l", "3l", "2m"), ("2r", "3r", "1m")], True, False
    if c == e:
        return [("1l", "3l", "2r", "3r", "2m")], True, True
    if b == inverse(a):
        return [("1l", "3l", "2r", "3r", "2m")], True, True
    if c == inverse(a):
        return [("1l", "3l", "2m"), ("2r", "3r", "1m")], True, False
    if c == inverse(b):
        return [("1l", "3l", "2r", "3r", "1m")], True, True
    return [], False, False


def nucleus_coincidence_check(q: FiniteQuasigroup, w: InverseWitness, avt: AutotopyGroup | None = None) -> CheckReport:
    """Verify the component-group relations forced by the witness's autostrophies.

    ``checks`` holds the relations derived from the component transport table
    applied to each autostrophy and its inverse, plus the loop-level coincidences.
    ``details["stated"]`` records the per-family relations as usually listed;
    some of those only hold after swapping the conjugating permutation.
    """
    if not check_witness(q, w):
        raise WitnessInvalid(f"{w.family} witness does not hold on this quasigroup")
    if avt is None:
        avt = autotopy_group(q)
    G = component_groups(q, avt)
    rep = CheckReport()
    for i, s in enumerate(autostrophies(w, q.n)):
        for tag, iso in (("", s), (" inverse", invert_isostrophy(s))):
            pred = predicted_components(G, iso.sigma, iso.t)
            rep.checks[f"autostrophy {i}{tag} {iso.sigma}: components transported"] = all(
                pred[k] == G[k].group for k in G
            )
    rep.details["stated"] = _stated_relations(w, G, q.n)
    if q.is_loop():
        e = q.identity
        groups, garrison_equal, normal = _loop_claims(w, q.n)
        if w.family == "m_inverse":
            J = w.perms[0]
            if all(q.mul(x, J(x)) == e for x in range(q.n)):
                garrison_equal = True
        for chain in groups:
            rep.checks["equal: " + " = ".join(chain)] = len({G[_KEYS[k]].group for k in chain}) == 1
        nl, nr, nm = (garrison_nucleus(q, s).elements for s in (LEFT, RIGHT, MIDDLE))
        rep.details["garrison"] = {"left": sorted(nl), "right": sorted(nr), "middle": sorted(nm)}
        if garrison_equal:
            rep.checks["Garrison N_l = N_r = N_m"] = nl == nr == nm
        if normal:
            nrep = normality_report(q, avt)
            rep.checks["Garrison nucleus normal"] = not nrep.coset_checks["middle"]["mismatches"]
    return rep
