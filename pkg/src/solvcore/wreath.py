"""Restricted wreath products A wr B: pair forms, arithmetic, conjugacy.

Elements are pairs ``(b, f)`` with ``b`` in B and ``f: B -> A`` finitely
supported.  Multiplication is ``(b, f)(c, g) = (bc, f^c g)`` where
``f^c(p) = f(p c^-1)``.  "z conjugates x to y" means ``z x z^-1 = y``.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from . import groups
from .errors import AlphabetError, NotAbelianError, VerificationError
from .groups import INFINITE, GroupDescriptor, is_abelian, is_trivial, key, same
from .words import IDENTITY, Word, format_word

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WreathElement:
    top: Word = IDENTITY
    support: Tuple[Tuple[Word, Word], ...] = ()

    def keys(self) -> List[Word]:
        return [k for k, _ in self.support]

    def is_identity(self) -> bool:
        # only meaningful for normalized elements
        return not self.support and not self.top.letters


@dataclass(frozen=True)
class CosetReps:
    base: Word
    reps: Tuple[Word, ...]


def make_element(top: Word, pairs: Iterable[Tuple[Word, Word]],
                 A: GroupDescriptor, B: GroupDescriptor) -> WreathElement:
    """Collect equal keys (multiplying values in order) and drop trivial values."""
    table = {}
    for k, v in pairs:
        kk = key(B, k)
        if kk in table:
            table[kk][1] = table[kk][1] * v
        else:
            table[kk] = [k, v]
    support = tuple((k, v) for k, v in table.values() if not is_trivial(A, v))
    return WreathElement(top, support)


def element_key(e: WreathElement, A: GroupDescriptor, B: GroupDescriptor):
    return (key(B, e.top), frozenset((key(B, k), key(A, v)) for k, v in e.support))


def w_equal(u: WreathElement, v: WreathElement, A, B) -> bool:
    return element_key(u, A, B) == element_key(v, A, B)


def value_at(e: WreathElement, p: Word, B: GroupDescriptor) -> Word:
    kp = key(B, p)
    for k, v in e.support:
        if key(B, k) == kp:
            return v
    return IDENTITY


# ---------------------------------------------------------------- pair form

def _shift(letters, by: int) -> Word:
    return Word._reduced(tuple(a + by if a > 0 else a - by for a in letters))


def to_pair_form(w: Word, A: GroupDescriptor, B: GroupDescriptor) -> WreathElement:
    """Rewrite ``b_1 a_1 ... b_k a_k`` as ``(b_1...b_k, f)`` with a_i placed at b_{i+1}...b_k."""
    nA = A.rank
    if w.rank > nA + B.rank:
        raise AlphabetError(f"word {w} outside the alphabet of wr({A},{B})")
    top_letters = []
    segments = []  # (number of B letters seen, A letters)
    for a in w.letters:
        if abs(a) <= nA:
            if segments and segments[-1][0] == len(top_letters):
                segments[-1][1].append(a)
            else:
                segments.append((len(top_letters), [a]))
        else:
            top_letters.append(a - nA if a > 0 else a + nA)
    pairs = [(Word(tuple(top_letters[seen:])), Word(tuple(seg))) for seen, seg in segments]
    return make_element(Word(tuple(top_letters)), pairs, A, B)


def pair_to_word(e: WreathElement, A: GroupDescriptor, B: GroupDescriptor) -> Word:
    """``b * prod k^-1 v k``: the function value v at k is the conjugate ``k^-1 v k``."""
    nA = A.rank
    w = _shift(e.top.letters, nA)
    for k, v in e.support:
        lk = _shift(k.letters, nA)
        w = w * ~lk * v * lk
    return w


def format_element(e: WreathElement, A: GroupDescriptor) -> str:
    split = A.A.rank if isinstance(A, groups.Wreath) else None
    top = format_word(e.top, split=0)
    body = " ; ".join(f"{format_word(k, split=0)} -> {format_word(v, split=split)}"
                      for k, v in e.support)
    return f"{top} | {body}" if body else f"{top} |"


# ---------------------------------------------------------------- arithmetic

def w_mul(u: WreathElement, v: WreathElement, A, B) -> WreathElement:
    c = v.top
    shifted = [(k * c, a) for k, a in u.support]
    return make_element(u.top * v.top, shifted + list(v.support), A, B)


def w_inv(u: WreathElement, A, B) -> WreathElement:
    b = u.top
    return make_element(~b, [(k * ~b, ~a) for k, a in u.support], A, B)


def w_conj(z: WreathElement, x: WreathElement, A, B) -> WreathElement:
    return w_mul(w_mul(z, x, A, B), w_inv(z, A, B), A, B)


def w_pow(u: WreathElement, n: int, A, B) -> WreathElement:
    if n < 0:
        u, n = w_inv(u, A, B), -n
    result = WreathElement()
    while n:
        if n & 1:
            result = w_mul(result, u, A, B)
        u = w_mul(u, u, A, B)
        n >>= 1
    return result


def order_wreath(w: Word, G: groups.Wreath):
    A, B = G.A, G.B
    e = to_pair_form(w, A, B)
    N = groups.order(B, e.top)
    if N == INFINITE:
        return INFINITE
    p = w_pow(e, N, A, B)
    return N * groups.lcm_orders(groups.order(A, v) for _, v in p.support)


def pp_wreath(x: Word, y: Word, G: groups.Wreath) -> Optional[int]:
    A, B = G.A, G.B
    X, Y = to_pair_form(x, A, B), to_pair_form(y, A, B)
    if Y.is_identity():
        return 0 if X.is_identity() else None
    n0 = groups.pp(B, X.top, Y.top)
    if n0 is None:
        return None
    N = groups.order(B, Y.top)
    if N == INFINITE:
        # tops pin down n uniquely
        return n0 if w_equal(w_pow(Y, n0, A, B), X, A, B) else None
    n0 %= N
    P = w_pow(Y, N, A, B)  # trivial top
    R = w_mul(X, w_pow(Y, -n0, A, B), A, B)
    if P.is_identity():
        return n0 if R.is_identity() else None
    orders = [groups.order(A, v) for _, v in P.support]
    if all(o != INFINITE for o in orders):
        period = groups.lcm_orders(orders)
        Q = WreathElement()
        for q in range(period):
            if w_equal(Q, R, A, B):
                return n0 + N * q
            Q = w_mul(Q, P, A, B)
        return None
    # some value of P has infinite order: it fixes q
    p, v = next((k, v) for (k, v), o in zip(P.support, orders) if o == INFINITE)
    q = groups.pp(A, value_at(R, p, B), v)
    if q is None:
        return None
    return n0 + N * q if w_equal(w_pow(P, q, A, B), R, A, B) else None


# ---------------------------------------------------------------- cosets and pi

def _extend_reps(reps: List[Word], points: Iterable[Word], b: Word, B) -> List[Word]:
    reps = list(reps)
    for p in points:
        if not any(groups.pp(B, ~t * p, b) is not None for t in reps):
            reps.append(p)
    return reps


def coset_reps(b: Word, points: Sequence[Word], B: GroupDescriptor) -> CosetReps:
    """One representative from `points` per left coset t<b> they meet."""
    return CosetReps(b, tuple(_extend_reps([], points, b, B)))


def _positions(t: Word, gamma: Word, e: WreathElement, base: Word, N, B) -> dict:
    """Exponents j with t base^j gamma^-1 in supp(e), mapped to the value there."""
    hits = {}
    for k, v in e.support:
        j = groups.pp(B, ~t * k * gamma, base)
        if j is None:
            continue
        if N != INFINITE:
            j %= N
        hits[j] = v
    return hits


def pi_map(t: Word, gamma: Word, e: WreathElement, A: GroupDescriptor, B: GroupDescriptor,
           base: Optional[Word] = None, order=None) -> Word:
    """Product of ``f(t base^j gamma^-1)`` over ascending j (j in [0, N) for finite order N).

    `base` defaults to the top of `e`.
    """
    if base is None:
        base = e.top
    N = groups.order(B, base) if order is None else order
    hits = _positions(t, gamma, e, base, N, B)
    out = IDENTITY
    for j in sorted(hits):
        out = out * hits[j]
    return out


# ---------------------------------------------------------------- conjugacy

def _decide(x: WreathElement, y: WreathElement, A, B, fast: bool):
    """Return ``(verdict, d)``; d is a top conjugator meeting the criterion when found."""
    b, c = x.top, y.top
    if not groups.cp(B, b, c):
        log.debug("step 1: tops %s and %s not conjugate", b, c)
        return False, None
    N = groups.order(B, b)
    f_pts, g_pts = x.keys(), y.keys()
    T_b = list(coset_reps(b, f_pts + g_pts, B).reps)
    pif = [pi_map(t, IDENTITY, x, A, B, order=N) for t in T_b]
    nontrivial = [i for i, p in enumerate(pif) if not is_trivial(A, p)]

    if not g_pts:
        log.debug("case 1: g = 1, %d coset reps", len(T_b))
        return not nontrivial, None

    T_c = list(coset_reps(c, g_pts, B).reps)
    pig = [pi_map(s, IDENTITY, y, A, B, order=N) for s in T_c]
    if not nontrivial:
        log.debug("case 2: all pi_t(f) trivial, %d reps for <c>", len(T_c))
        return all(is_trivial(A, p) for p in pig), None

    k = nontrivial[0]
    tk = T_b[k]
    if fast:
        left = Counter(key(A, pif[i]) for i in nontrivial)
        right = Counter(key(A, p) for p in pig if not is_trivial(A, p))
        if left != right:
            log.debug("case 3 (abelian base): pi-value multisets differ")
            return False, None
        # t_k d^-1 must land in a <c>-coset carrying the same pi value
        candidates = [~s * tk for s, p in zip(T_c, pig) if same(A, p, pif[k])]
    else:
        # pi^(d)_{t_k}(g) != 1 forces t_k b^l d^-1 into supp(g); l is irrelevant
        candidates = [~beta * tk for beta in g_pts]
    related = same if (N == INFINITE or is_abelian(A)) else groups.cp
    log.debug("case 3: order(b) = %s, %d candidate d", N, len(candidates))

    tried = set()
    for d in candidates:
        kd = key(B, d)
        if kd in tried:
            continue
        tried.add(kd)
        if not same(B, d * b, c * d):
            continue
        reps = _extend_reps(T_b, [beta * d for beta in g_pts], b, B)
        ok = True
        for i, t in enumerate(reps):
            pf = pif[i] if i < len(pif) else IDENTITY
            pg = pi_map(t, d, y, A, B, base=b, order=N)
            if not related(A, pf, pg):
                ok = False
                break
        if ok:
            log.debug("case 3: accepted with d = %s", d)
            return True, d
    log.debug("case 3: no candidate d survived")
    return False, None


def cp_wreath(x: WreathElement, y: WreathElement, A: GroupDescriptor, B: GroupDescriptor) -> bool:
    return _decide(x, y, A, B, fast=False)[0]


def cp_wreath_abelian_fastpath(x: WreathElement, y: WreathElement,
                               A: GroupDescriptor, B: GroupDescriptor) -> bool:
    """Conjugacy when A is abelian: candidates for d are matched by pi value."""
    if not is_abelian(A):
        raise NotAbelianError(f"{A} is not abelian")
    return _decide(x, y, A, B, fast=True)[0]


def csp_wreath(x: WreathElement, y: WreathElement, A: GroupDescriptor,
               B: GroupDescriptor) -> Optional[WreathElement]:
    """A verified z = (d, h) with z x z^-1 = y, or None."""
    ok, d = _decide(x, y, A, B, fast=is_abelian(A))
    if not ok:
        return None
    b, c = x.top, y.top
    if d is None:
        d = groups.csp(B, b, c)
    N = groups.order(B, b)
    reps = coset_reps(b, x.keys() + [beta * d for beta in y.keys()], B).reps
    h = []
    for t in reps:
        F = _positions(t, IDENTITY, x, b, N, B)
        G = _positions(t, d, y, b, N, B)
        if N == INFINITE:
            if not F and not G:
                continue
            window = range(min(F.keys() | G.keys()), max(F.keys() | G.keys()) + 1)
            alpha = IDENTITY
        else:
            window = range(N)
            pf = pg = IDENTITY
            for j in sorted(F):
                pf = pf * F[j]
            for j in sorted(G):
                pg = pg * G[j]
            alpha = groups.csp(A, pf, pg)
            if alpha is None:
                raise VerificationError(f"pi values {pf} and {pg} not conjugate in {A}")
        fp = gp = IDENTITY
        bk = b ** window.start
        for k in window:
            fp = fp * F.get(k, IDENTITY)
            gp = gp * G.get(k, IDENTITY)
            h.append((t * bk, ~gp * alpha * fp))
            bk = bk * b
    z = make_element(d, h, A, B)
    if not w_equal(w_conj(z, x, A, B), y, A, B):
        raise VerificationError(f"wreath conjugator {z} failed for {x} -> {y}")
    return z
