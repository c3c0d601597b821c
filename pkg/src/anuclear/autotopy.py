"""Autotopy groups: pruned search, plain enumeration oracle, Leakh extension."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DegreeMismatch, NotExtendable, SearchBoundExceeded
from .isotopy import LOOP, Isotopy, apply_isotopy, lp_isotopy
from .perm import Perm, PermGroup, compose, inverse
from .quasigroup import FiniteQuasigroup, check_degree

Autotopy = Isotopy

DEFAULT_SEARCH_BOUND = 8


@dataclass(frozen=True)
class SearchConfig:
    max_n: int = DEFAULT_SEARCH_BOUND
    method: str = "leakh"  # or "plain"


def is_autotopy(q: FiniteQuasigroup, t: Isotopy) -> bool:
    check_degree(q, *t)
    a, b, g = t.alpha.images, t.beta.images, t.gamma.images
    tab = q.table
    for x in range(q.n):
        row, ax = tab[x], tab[a[x]]
        for y in range(q.n):
            if ax[b[y]] != g[row[y]]:
                return False
    return True


@dataclass(frozen=True)
class AutotopyGroup:
    quasigroup: FiniteQuasigroup
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Isotopy]:
        return iter(sorted(self.elements))

    def __contains__(self, t) -> bool:
        return t in self.elements

    def is_group(self) -> bool:
        els = self.elements
        if Isotopy.identity(self.quasigroup.n) not in els:
            return False
        return all(a.then(b) in els for a in els for b in els)

    def component_group(self, position: int) -> PermGroup:
        return PermGroup(self.quasigroup.n, frozenset(t.component(position) for t in self.elements))

    def as_perm_group(self) -> PermGroup:
        """Faithful image on three disjoint copies of Q, for fingerprinting."""
        n = self.quasigroup.n
        return PermGroup(
            3 * n,
            frozenset(
                Perm(t.alpha.images + tuple(n + v for v in t.beta.images) + tuple(2 * n + v for v in t.gamma.images))
                for t in self.elements
            ),
        )

    def automorphisms(self) -> frozenset:
        return frozenset(t for t in self.elements if t.alpha == t.beta == t.gamma)


def _loop_gammas(loop: FiniteQuasigroup, a: int, b: int) -> Iterator[tuple]:
    """All gamma with gamma(x*y) = (gamma x / b) * (a \\ gamma y), gamma(e) = a*b.

    Seeds alpha(e) = a and beta(e) = b; propagation closes the partial map under
    products, branching on the smallest unassigned point when it stalls.
    """
    n = loop.n
    tab, ldiv, rdiv = loop.table, loop.ldiv, loop.rdiv
    e = loop.identity
    ra = [rdiv[u][b] for u in range(n)]  # R_b^-1
    la = list(ldiv[a])  # L_a^-1

    def close(gamma, used, assigned, queue):
        while queue:
            x = queue.pop()
            gx = gamma[x]
            for y in list(assigned):
                gy = gamma[y]
                for u, v, gu, gv in ((x, y, gx, gy), (y, x, gy, gx)):
                    z = tab[u][v]
                    val = tab[ra[gu]][la[gv]]
                    cur = gamma[z]
                    if cur < 0:
                        if used[val]:
                            return False
                        gamma[z] = val
                        used[val] = True
                        assigned.append(z)
                        queue.append(z)
                    elif cur != val:
                        return False
        return True

    def search(gamma, used, assigned):
        if len(assigned) == n:
            yield tuple(gamma)
            return
        x = gamma.index(-1)
        for v in range(n):
            if used[v]:
                continue
            g2, u2, a2 = gamma[:], used[:], assigned[:]
            g2[x] = v
            u2[v] = True
            a2.append(x)
            if close(g2, u2, a2, [x]):
                yield from search(g2, u2, a2)

    gamma = [-1] * n
    used = [False] * n
    g0 = tab[a][b]
    gamma[e] = g0
    used[g0] = True
    assigned = [e]
    if close(gamma, used, assigned, [e]):
        yield from search(gamma, used, assigned)


def _loop_autotopies(loop: FiniteQuasigroup) -> set:
    n = loop.n
    out = set()
    for a in range(n):
        for g1 in range(n):
            b = loop.ldiv[a][g1]  # a * b = gamma(e)
            for gimg in _loop_gammas(loop, a, b):
                gamma = Perm._trusted(gimg)
                alpha = Perm._trusted(tuple(loop.rdiv[v][b] for v in gimg))
                beta = Perm._trusted(tuple(loop.ldiv[a][v] for v in gimg))
                t = Isotopy(alpha, beta, gamma)
                if is_autotopy(loop, t):
                    out.add(t)
    return out


def autotopy_group(q: FiniteQuasigroup, max_n: int = DEFAULT_SEARCH_BOUND, method: str = "leakh") -> AutotopyGroup:
    if q.n > max_n:
        raise SearchBoundExceeded(q.n, max_n)
    if method == "plain":
        return plain_autotopy_group(q)
    if method != "leakh":
        raise ValueError(f"unknown method {method!r}")
    if q.n == 0:
        return AutotopyGroup(q, frozenset())
    t = lp_isotopy(q, LOOP, 0, 0)
    loop = apply_isotopy(q, t)
    # Avt(qT) = T^-1 Avt(q) T, so Avt(q) = T Avt(qT) T^-1
    tinv = t.inverse()
    return AutotopyGroup(q, frozenset(s.conjugate(tinv) for s in _loop_autotopies(loop)))


def plain_autotopy_group(q: FiniteQuasigroup) -> AutotopyGroup:
    """Enumerate every gamma in S_n and every alpha(0); the rest is forced.

    alpha(x) * beta(0) = gamma(x*0) and alpha(0) * beta(y) = gamma(0*y).
    """
    n = q.n
    tab, ldiv, rdiv = q.table, q.ldiv, q.rdiv
    col0 = [tab[x][0] for x in range(n)]
    row0 = tab[0]
    out = set()
    for gimg in itertools.permutations(range(n)):
        g0 = gimg[tab[0][0]]  # a * b
        for a in range(n):
            b = ldiv[a][g0]
            alpha = tuple(rdiv[gimg[col0[x]]][b] for x in range(n))
            if len(set(alpha)) != n:
                continue
            beta = tuple(ldiv[a][gimg[row0[y]]] for y in range(n))
            if len(set(beta)) != n:
                continue
            t = Isotopy(Perm._trusted(alpha), Perm._trusted(beta), Perm._trusted(gimg))
            if is_autotopy(q, t):
                out.add(t)
    return AutotopyGroup(q, frozenset(out))


def third_from_two(q: FiniteQuasigroup, position: int, p1: Perm, p2: Perm) -> Isotopy:
    """Complete two known components to the unique autotopy, or raise NotExtendable.

    ``p1, p2`` fill the two positions other than ``position``, in increasing order.
    """
    check_degree(q, p1, p2)
    R0, L0 = q.right(0), q.left(0)
    if position == 3:
        alpha, beta = p1, p2
        gamma = compose(q.right(beta(0)), compose(alpha, inverse(R0)))
    elif position == 1:
        beta, gamma = p1, p2
        alpha = compose(inverse(q.right(beta(0))), compose(gamma, R0))
    elif position == 2:
        alpha, gamma = p1, p2
        beta = compose(inverse(q.left(alpha(0))), compose(gamma, L0))
    else:
        raise ValueError("position must be 1, 2 or 3")
    t = Isotopy(alpha, beta, gamma)
    if not is_autotopy(q, t):
        raise NotExtendable(f"no autotopy completes the given components at position {position}")
    return t


def leakh_extend(q: FiniteQuasigroup, i: int, p: Perm, j: int, a: int, b: int) -> Isotopy:
    """The unique autotopy with component i equal to p and component j sending a to b."""
    if i == j or i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError("need two distinct positions in 1..3")
    check_degree(q, p)
    R, L, P = q.right, q.left, q.middle
    inv = inverse
    # each case derives one more component from p and the pair a -> b
    if (i, j) == (1, 2):  # gamma(x*a) = alpha x * b
        k, derived = 3, compose(R(b), compose(p, inv(R(a))))
    elif (i, j) == (2, 1):  # gamma(a*y) = b * beta y
        k, derived = 3, compose(L(b), compose(p, inv(L(a))))
    elif (i, j) == (1, 3):  # alpha x * beta(P_a x) = b
        k, derived = 2, compose(P(b), compose(p, inv(P(a))))
    elif (i, j) == (3, 1):  # b * beta y = gamma(a*y)
        k, derived = 2, compose(inv(L(b)), compose(p, L(a)))
    elif (i, j) == (2, 3):  # alpha(P_a^-1 y) * beta y = b
        k, derived = 1, compose(inv(P(b)), compose(p, P(a)))
    else:  # (3, 2): alpha x * b = gamma(x*a)
        k, derived = 1, compose(inv(R(b)), compose(p, R(a)))
    known = {i: p, k: derived}
    missing = ({1, 2, 3} - set(known)).pop()
    return third_from_two(q, missing, *(known[m] for m in sorted(known)))


def conjugate_group(avt: AutotopyGroup, t: Isotopy) -> AutotopyGroup:
    """T^-1 Avt T, the autotopy group of apply_isotopy(q, T)."""
    if t.degree != avt.quasigroup.n:
        raise DegreeMismatch(t.degree, avt.quasigroup.n)
    return AutotopyGroup(apply_isotopy(avt.quasigroup, t), frozenset(s.conjugate(t) for s in avt.elements))


def brute_force_autotopies(q: FiniteQuasigroup) -> frozenset:
    """All (alpha, beta) pairs completed by third_from_two. Feasible for n <= 4."""
    out = set()
    perms = [Perm._trusted(p) for p in itertools.permutations(range(q.n))]
    for alpha in perms:
        for beta in perms:
            try:
                out.add(third_from_two(q, 3, alpha, beta))
            except NotExtendable:
                pass
    return frozenset(out)


def order_bound(n: int) -> int:
    return math.factorial(n) * n
