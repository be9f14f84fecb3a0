"""The Magnus embedding F/N' -> M(F/N) over the integral group ring of B = F/N.

An image is a pair ``(mu, u)`` standing for the matrix ``((mu, u), (0, 1))``
with ``u`` a vector of r group-ring elements.  Products follow
``(g, u)(g', u') = (g g', g u' + u)``.

Free solvable groups S(d, r) = F/F^(d) get canonical keys by iterating the
embedding: a key at degree d is the degree-(d-1) key of mu together with the
collected coefficients of u, themselves keyed at degree d-1.
"""
from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from . import groups
from .errors import AlphabetError, NotInImageError, VerificationError
from .groups import FreeAbelian, FreeSolvable, GroupDescriptor, abelianization, from_exponents
from .words import IDENTITY, Word, format_word

CHECK_IDENTITY = bool(os.environ.get("SOLVCORE_DEBUG"))


# ---------------------------------------------------------------- solvable keys

def _freeze(us) -> tuple:
    return tuple(frozenset(u.items()) for u in us)


def _accumulate(d: int, r: int, letters: tuple):
    lower = solvable_prefix_keys(d - 1, r, letters)
    us = [dict() for _ in range(r)]
    for j, a in enumerate(letters):
        i = abs(a) - 1
        if a > 0:
            k, c = lower[j], 1
        else:
            k, c = lower[j + 1], -1
        u = us[i]
        c += u.get(k, 0)
        if c:
            u[k] = c
        else:
            del u[k]
        yield lower[j + 1], us


@lru_cache(maxsize=1 << 12)
def solvable_prefix_keys(d: int, r: int, letters: tuple) -> tuple:
    if d == 1:
        cur = [0] * r
        out = [tuple(cur)]
        for a in letters:
            cur[abs(a) - 1] += 1 if a > 0 else -1
            out.append(tuple(cur))
        return tuple(out)
    out = [solvable_key(d, r, ())]
    out.extend((mu, _freeze(us)) for mu, us in _accumulate(d, r, letters))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def solvable_key(d: int, r: int, letters: tuple):
    if d == 1:
        return abelianization(Word._reduced(letters), r)
    mu = solvable_key(d - 1, r, ())
    us = [{} for _ in range(r)]
    for mu, us in _accumulate(d, r, letters):
        pass
    return mu, _freeze(us)


# ---------------------------------------------------------------- group ring

class GroupRingElement:
    """Finite integer combination of elements of B, collected by canonical key."""

    __slots__ = ("group", "_terms")

    def __init__(self, group: GroupDescriptor, terms: Iterable[Tuple[int, Word]] = ()):
        self.group = group
        self._terms: Dict[object, list] = {}
        for c, w in terms:
            self._add(groups.key(group, w), w, c)

    def _add(self, k, w: Word, c: int):
        if not c:
            return
        t = self._terms.get(k)
        if t is None:
            self._terms[k] = [w, c]
        elif t[1] + c:
            t[1] += c
        else:
            del self._terms[k]

    def _copy(self) -> "GroupRingElement":
        p = GroupRingElement(self.group)
        p._terms = {k: list(t) for k, t in self._terms.items()}
        return p

    def terms(self) -> List[Tuple[int, Word]]:
        return [(c, w) for w, c in self._terms.values()]

    def coefficients(self) -> dict:
        return {k: t[1] for k, t in self._terms.items()}

    def coefficient(self, w: Word) -> int:
        t = self._terms.get(groups.key(self.group, w))
        return t[1] if t else 0

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self.coefficients() == other.coefficients()

    __hash__ = None

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        p = self._copy()
        for k, (w, c) in other._terms.items():
            p._add(k, w, c)
        return p

    def __neg__(self) -> "GroupRingElement":
        p = GroupRingElement(self.group)
        p._terms = {k: [w, -c] for k, (w, c) in self._terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> "GroupRingElement":
        if n == 0:
            return GroupRingElement(self.group)
        p = GroupRingElement(self.group)
        p._terms = {k: [w, n * c] for k, (w, c) in self._terms.items()}
        return p

    def lmul(self, g: Word) -> "GroupRingElement":
        """g * p: each term t becomes g t."""
        return GroupRingElement(self.group, ((c, g * w) for c, w in self.terms()))

    def rmul(self, g: Word) -> "GroupRingElement":
        return GroupRingElement(self.group, ((c, w * g) for c, w in self.terms()))

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{format_word(w)}" for c, w in self.terms())

    def __repr__(self):
        return f"GroupRingElement({self})"


def ring_add(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    return p + q


def ring_neg(p: GroupRingElement) -> GroupRingElement:
    return -p


def ring_lmul(g: Word, p: GroupRingElement) -> GroupRingElement:
    return p.lmul(g)


# ---------------------------------------------------------------- images

@dataclass(frozen=True, eq=False)
class MagnusImage:
    mu: Word
    u: Tuple[GroupRingElement, ...]
    group: GroupDescriptor

    @property
    def rank(self) -> int:
        return len(self.u)

    def __eq__(self, other):
        if not isinstance(other, MagnusImage):
            return NotImplemented
        return (self.group == other.group and self.rank == other.rank
                and groups.same(self.group, self.mu, other.mu)
                and all(p == q for p, q in zip(self.u, other.u)))

    __hash__ = None

    def is_identity(self) -> bool:
        return groups.is_trivial(self.group, self.mu) and not any(self.u)

    def __str__(self):
        parts = [f"mu = {format_word(self.mu)}"]
        parts += [f"u[{i}] = {p}" for i, p in enumerate(self.u, start=1)]
        return " ; ".join(parts)


def magnus_identity(B: GroupDescriptor, r: int) -> MagnusImage:
    return MagnusImage(IDENTITY, tuple(GroupRingElement(B) for _ in range(r)), B)


def _check_base(B: GroupDescriptor, r: int):
    if B.rank != r or not isinstance(B, (FreeAbelian, FreeSolvable)):
        raise AlphabetError(f"{B} is not a quotient of the free group of rank {r}")


def magnus_image(w: Word, B: GroupDescriptor, r: int) -> MagnusImage:
    """phi(w): letter x_i adds g e_i, letter x_i^-1 adds -(g x_i^-1) e_i, g the prefix so far."""
    _check_base(B, r)
    groups._check(B, w)
    pk = groups.prefix_keys(B, w)
    us = [GroupRingElement(B) for _ in range(r)]
    letters = w.letters
    for j, a in enumerate(letters):
        if a > 0:
            us[a - 1]._add(pk[j], Word._reduced(letters[:j]), 1)
        else:
            us[-a - 1]._add(pk[j + 1], Word._reduced(letters[:j + 1]), -1)
    m = MagnusImage(w, tuple(us), B)
    if CHECK_IDENTITY and not image_membership(m):
        raise VerificationError(f"fundamental identity fails for {w}")
    return m


def magnus_mul(m1: MagnusImage, m2: MagnusImage) -> MagnusImage:
    if m1.group != m2.group or m1.rank != m2.rank:
        raise ValueError("shape mismatch")
    g = m1.mu
    return MagnusImage(g * m2.mu, tuple(p2.lmul(g) + p1 for p1, p2 in zip(m1.u, m2.u)), m1.group)


def magnus_inv(m: MagnusImage) -> MagnusImage:
    gi = ~m.mu
    return MagnusImage(gi, tuple(-(p.lmul(gi)) for p in m.u), m.group)


def image_membership(m: MagnusImage) -> bool:
    """sum_i u_i (x_i - 1) == mu - 1 in Z[B]."""
    B = m.group
    lhs = GroupRingElement(B)
    for i, p in enumerate(m.u, start=1):
        lhs = lhs + p.rmul(Word.gen(i)) - p
    rhs = GroupRingElement(B, [(1, m.mu), (-1, IDENTITY)])
    return lhs == rhs


def magnus_to_wreath(m: MagnusImage):
    """The isomorphism M(F/N) -> F/F' wr F/N: the term at beta becomes the point beta^-1 mu."""
    from .wreath import make_element
    B, r = m.group, m.rank
    vecs = {}
    for i, p in enumerate(m.u):
        for c, beta in p.terms():
            pt = ~beta * m.mu
            k = groups.key(B, pt)
            if k not in vecs:
                vecs[k] = [pt, [0] * r]
            vecs[k][1][i] += c
    pairs = [(pt, from_exponents(v)) for pt, v in vecs.values()]
    return make_element(m.mu, pairs, FreeAbelian(r), B)


def wreath_to_magnus(e, B: GroupDescriptor, r: int) -> MagnusImage:
    us = [GroupRingElement(B) for _ in range(r)]
    g = e.top
    for pt, v in e.support:
        beta = g * ~pt
        k = groups.key(B, beta)
        for i, c in enumerate(abelianization(v, r)):
            us[i]._add(k, beta, c)
    return MagnusImage(g, tuple(us), B)


def magnus_preimage(m: MagnusImage) -> Word:
    """A word w with phi(w) == m, read off as an Euler trail of u on the Cayley graph of B.

    The coefficient of beta in u_i is the net number of traversals of the edge
    beta -> beta x_i.  Flow components not touching the trail from 1 to mu are
    visited by detours rep(v) . circuit . rep(v)^-1 from the identity.
    """
    if not image_membership(m):
        raise NotInImageError("fundamental identity fails")
    B = m.group
    reps = {}
    out_edges = defaultdict(list)  # vertex key -> [(letter, target key)]

    def vertex(w: Word):
        k = groups.key(B, w)
        reps.setdefault(k, w)
        return k

    for i, p in enumerate(m.u, start=1):
        for c, beta in p.terms():
            tail, head = vertex(beta), vertex(beta * Word.gen(i))
            if c > 0:
                out_edges[tail].extend([(i, head)] * c)
            else:
                out_edges[head].extend([(-i, tail)] * -c)
    for es in out_edges.values():
        # pop() from the end takes the smallest generator first
        es.sort(key=lambda e: (abs(e[0]), e[0] < 0), reverse=True)

    def trail(start) -> List[int]:
        # Hierholzer, iterative; letters along the walk
        stack = [(start, None)]
        path = []
        while stack:
            v, via = stack[-1]
            if out_edges[v]:
                a, nxt = out_edges[v].pop()
                stack.append((nxt, a))
            else:
                stack.pop()
                if via is not None:
                    path.append(via)
        path.reverse()
        return path

    one = vertex(IDENTITY)
    vertex(m.mu)
    letters = trail(one)
    detours = []
    for v in list(out_edges):
        if out_edges[v]:
            circuit = trail(v)
            rv = reps[v]
            detours.append(rv * Word(tuple(circuit)) * ~rv)
    w = IDENTITY
    for dt in detours:
        w = w * dt
    w = w * Word(tuple(letters))
    if magnus_image(w, B, m.rank) != m:
        raise VerificationError(f"preimage {w} does not re-embed to {m}")
    return w


# ---------------------------------------------------------------- word and power problems

def wp_solvable(d: int, r: int, w: Word) -> bool:
    return solvable_key(d, r, w.letters) == solvable_key(d, r, ())


def pp_solvable(d: int, r: int, x: Word, y: Word) -> Optional[int]:
    """The unique n with x = y^n in S(d, r), or None."""
    if wp_solvable(d, r, y):
        return 0 if wp_solvable(d, r, x) else None
    if wp_solvable(d, r, x):
        return 0
    n = _power_candidate(d, r, x, y)
    if n is None:
        return None
    return n if wp_solvable(d, r, x * (y ** -n)) else None


def _power_candidate(d: int, r: int, x: Word, y: Word) -> Optional[int]:
    ay = abelianization(y, r)
    if any(ay):
        return groups._pp_free_abelian(abelianization(x, r), ay)
    if d == 1:
        return None  # y is trivial here, handled by the caller
    B = FreeSolvable(d - 1, r) if d > 2 else FreeAbelian(r)
    if not groups.is_trivial(B, y):
        return pp_solvable(d - 1, r, x, y)
    if not groups.is_trivial(B, x):
        return None
    # x, y in F^(d-1): phi(y^n) = (1, n u_y)
    ux = magnus_image(x, B, r).u
    uy = magnus_image(y, B, r).u
    for px, py in zip(ux, uy):
        for c, w in py.terms():
            cx = px.coefficient(w)
            if cx % c:
                return None
            return cx // c
    return None
