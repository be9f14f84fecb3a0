"""Group descriptors and the uniform oracle facade.

Every descriptor admits a canonical key: a hashable value ``key(G, w)`` with
``key(G, u) == key(G, v)`` exactly when ``u = v`` in ``G``.  The word problem
and all term collection (group rings, wreath supports) go through it.
"""
from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Optional, Union

from .errors import ParseError, VerificationError
from .words import IDENTITY, Word, check_rank, conj_by

INFINITE = math.inf

# When set, conjugacy decisions in wreath products and free solvable groups
# run both the general and the abelian-base path and compare verdicts.
CROSS_CHECK = contextvars.ContextVar("solvcore_cross_check", default=False)


@contextlib.contextmanager
def cross_checking(enabled: bool = True):
    token = CROSS_CHECK.set(enabled)
    try:
        yield
    finally:
        CROSS_CHECK.reset(token)


@dataclass(frozen=True)
class FreeAbelian:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")

    def __str__(self):
        return f"Z^{self.rank}"


@dataclass(frozen=True)
class FiniteCyclic:
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")

    @property
    def rank(self) -> int:
        return 1

    def __str__(self):
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class FreeSolvable:
    """F_r / F^(d), with F^(1) = [F, F]; degree 1 is free abelian."""

    degree: int
    rank: int

    def __post_init__(self):
        if self.degree < 1 or self.rank < 1:
            raise ValueError(f"degree and rank must be positive, got S({self.degree},{self.rank})")

    def __str__(self):
        return f"S({self.degree},{self.rank})"


@dataclass(frozen=True)
class Wreath:
    """Restricted wreath product A wr B; letters 1..rank(A) are A's, the rest B's."""

    A: "GroupDescriptor"
    B: "GroupDescriptor"

    @property
    def rank(self) -> int:
        return self.A.rank + self.B.rank

    def __str__(self):
        return f"wr({self.A},{self.B})"


GroupDescriptor = Union[FreeAbelian, FiniteCyclic, FreeSolvable, Wreath]


def is_abelian(G: GroupDescriptor) -> bool:
    return isinstance(G, (FreeAbelian, FiniteCyclic)) or (
        isinstance(G, FreeSolvable) and G.degree == 1)


def abelianization(w: Word, rank: int) -> tuple:
    v = [0] * rank
    for a in w.letters:
        v[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(v)


def from_exponents(vec) -> Word:
    letters = []
    for i, e in enumerate(vec, start=1):
        letters.extend([i if e > 0 else -i] * abs(e))
    return Word._reduced(tuple(letters))


# ---------------------------------------------------------------- keys

@lru_cache(maxsize=1 << 16)
def key(G: GroupDescriptor, w: Word):
    """Canonical hashable form of the element ``w`` of ``G``."""
    if isinstance(G, FreeAbelian):
        return abelianization(w, G.rank)
    if isinstance(G, FiniteCyclic):
        return sum(1 if a > 0 else -1 for a in w.letters) % G.modulus
    if isinstance(G, FreeSolvable):
        from . import magnus
        return magnus.solvable_key(G.degree, G.rank, w.letters)
    if isinstance(G, Wreath):
        from . import wreath
        return wreath.element_key(wreath.to_pair_form(w, G.A, G.B), G.A, G.B)
    raise TypeError(f"not a group descriptor: {G!r}")


@lru_cache(maxsize=1 << 12)
def prefix_keys(G: GroupDescriptor, w: Word) -> tuple:
    """Keys of all prefixes ``w[:0], ..., w[:len(w)]``."""
    if isinstance(G, (FreeAbelian, FiniteCyclic)):
        n = G.rank
        cur = [0] * n
        out = [key(G, IDENTITY)]
        for a in w.letters:
            cur[abs(a) - 1] += 1 if a > 0 else -1
            if isinstance(G, FiniteCyclic):
                out.append(cur[0] % G.modulus)
            else:
                out.append(tuple(cur))
        return tuple(out)
    if isinstance(G, FreeSolvable):
        from . import magnus
        return magnus.solvable_prefix_keys(G.degree, G.rank, w.letters)
    return tuple(key(G, w.prefix(j)) for j in range(len(w) + 1))


def same(G: GroupDescriptor, u: Word, v: Word) -> bool:
    return key(G, u) == key(G, v)


def is_trivial(G: GroupDescriptor, w: Word) -> bool:
    return key(G, w) == key(G, IDENTITY)


def _check(G: GroupDescriptor, *ws: Word):
    for w in ws:
        if not isinstance(w, Word):
            raise TypeError(f"expected Word, got {type(w).__name__}")
        check_rank(w, G.rank)


# ---------------------------------------------------------------- oracles

def wp(G: GroupDescriptor, w: Word) -> bool:
    """True iff w = 1 in G."""
    _check(G, w)
    return is_trivial(G, w)


def cp(G: GroupDescriptor, x: Word, y: Word) -> bool:
    """True iff z x z^-1 = y for some z in G."""
    _check(G, x, y)
    if is_abelian(G):
        return same(G, x, y)
    if isinstance(G, FreeSolvable):
        from .solvable import cp_solvable
        return cp_solvable(G.degree, G.rank, x, y)
    from . import wreath
    X = wreath.to_pair_form(x, G.A, G.B)
    Y = wreath.to_pair_form(y, G.A, G.B)
    verdict = wreath.cp_wreath(X, Y, G.A, G.B)
    if CROSS_CHECK.get() and is_abelian(G.A):
        fast = wreath.cp_wreath_abelian_fastpath(X, Y, G.A, G.B)
        if fast != verdict:
            raise VerificationError(f"wreath paths disagree on {x} ~ {y} in {G}")
    return verdict


def csp(G: GroupDescriptor, x: Word, y: Word) -> Optional[Word]:
    """A word z with z x z^-1 = y in G, or None when x and y are not conjugate."""
    _check(G, x, y)
    if is_abelian(G):
        z = IDENTITY if same(G, x, y) else None
    elif isinstance(G, FreeSolvable):
        from .solvable import csp_solvable
        z = csp_solvable(G.degree, G.rank, x, y)
    else:
        from . import wreath
        e = wreath.csp_wreath(wreath.to_pair_form(x, G.A, G.B),
                              wreath.to_pair_form(y, G.A, G.B), G.A, G.B)
        z = None if e is None else wreath.pair_to_word(e, G.A, G.B)
    if z is not None and not same(G, conj_by(z, x), y):
        raise VerificationError(f"conjugator {z} does not conjugate {x} to {y} in {G}")
    return z


def _pp_free_abelian(a, b) -> Optional[int]:
    if not any(b):
        return 0 if not any(a) else None
    n = None
    for ai, bi in zip(a, b):
        if bi == 0:
            if ai != 0:
                return None
            continue
        if ai % bi:
            return None
        q = ai // bi
        if n is None:
            n = q
        elif n != q:
            return None
    return n


def _pp_cyclic(a: int, b: int, m: int) -> Optional[int]:
    # smallest n >= 0 with n*b = a (mod m)
    g = math.gcd(b, m)
    if a % g:
        return None
    m2 = m // g
    if m2 == 1:
        return 0
    return (a // g) * pow(b // g, -1, m2) % m2


def pp(G: GroupDescriptor, x: Word, y: Word) -> Optional[int]:
    """An integer n with x = y^n in G, or None.  Unique when G is torsion-free."""
    _check(G, x, y)
    if isinstance(G, FreeAbelian):
        return _pp_free_abelian(abelianization(x, G.rank), abelianization(y, G.rank))
    if isinstance(G, FiniteCyclic):
        return _pp_cyclic(key(G, x), key(G, y), G.modulus)
    if isinstance(G, FreeSolvable):
        from .magnus import pp_solvable
        return pp_solvable(G.degree, G.rank, x, y)
    from .wreath import pp_wreath
    return pp_wreath(x, y, G)


def order(G: GroupDescriptor, b: Word):
    """Order of b in G: a positive int, or INFINITE."""
    _check(G, b)
    if isinstance(G, FiniteCyclic):
        return G.modulus // math.gcd(G.modulus, key(G, b))
    if isinstance(G, (FreeAbelian, FreeSolvable)):
        # torsion-free
        return 1 if is_trivial(G, b) else INFINITE
    from .wreath import order_wreath
    return order_wreath(b, G)


def lcm_orders(orders) -> Union[int, float]:
    orders = list(orders)
    if any(o == INFINITE for o in orders):
        return INFINITE
    return reduce(math.lcm, orders, 1)


# ---------------------------------------------------------------- text

def parse_group(text: str) -> GroupDescriptor:
    """Parse ``Z^r``, ``Z/n``, ``S(d,r)`` or ``wr(A,B)``."""
    s = text.replace(" ", "")
    pos = 0

    def number():
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected a number", text, start)
        return int(s[start:pos])

    def expect(tok):
        nonlocal pos
        if not s.startswith(tok, pos):
            raise ParseError(f"expected {tok!r}", text, pos)
        pos += len(tok)

    def group():
        nonlocal pos
        start = pos
        if s.startswith("wr(", pos):
            pos += 3
            A = group()
            expect(",")
            B = group()
            expect(")")
            return Wreath(A, B)
        if s.startswith("S(", pos):
            pos += 2
            d = number()
            expect(",")
            r = number()
            expect(")")
            if d < 1 or r < 1:
                raise ParseError("degree and rank must be positive", text, start)
            return FreeSolvable(d, r)
        if s.startswith("Z/", pos):
            pos += 2
            n = number()
            if n < 1:
                raise ParseError("modulus must be positive", text, start)
            return FiniteCyclic(n)
        if s.startswith("Z^", pos):
            pos += 2
            r = number()
            if r < 1:
                raise ParseError("rank must be positive", text, start)
            return FreeAbelian(r)
        if s.startswith("Z", pos):
            pos += 1
            return FreeAbelian(1)
        raise ParseError("expected a group", text, pos)

    G = group()
    if pos != len(s):
        raise ParseError("trailing input", text, pos)
    return G
