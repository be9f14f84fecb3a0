"""Conjugacy and conjugator search in free solvable groups S(d, r).

S(d, r) embeds in Z^r wr S(d-1, r) by the Magnus embedding, and two elements
are conjugate in S(d, r) iff their images are conjugate there.  Degree 1 is
free abelian, where conjugacy is equality.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Optional

from . import magnus, wreath
from .errors import VerificationError
from .groups import CROSS_CHECK, FreeAbelian, FreeSolvable, GroupDescriptor, abelianization
from .words import IDENTITY, Word, conj_by, words_up_to

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 12


def default_budget() -> int:
    return int(os.environ.get("SOLVCORE_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class SolvableContext:
    degree: int
    rank: int

    def __post_init__(self):
        if self.degree < 1 or self.rank < 1:
            raise ValueError("degree and rank must be positive")

    @property
    def A(self) -> FreeAbelian:
        return FreeAbelian(self.rank)

    @property
    def B(self) -> GroupDescriptor:
        """S(d-1, r); the tower bottoms out at the free abelian group."""
        if self.degree == 2:
            return FreeAbelian(self.rank)
        return FreeSolvable(self.degree - 1, self.rank)

    def to_wreath(self, w: Word) -> wreath.WreathElement:
        return magnus.magnus_to_wreath(magnus.magnus_image(w, self.B, self.rank))


def cp_solvable(d: int, r: int, x: Word, y: Word) -> bool:
    if d == 1:
        return abelianization(x, r) == abelianization(y, r)
    ctx = SolvableContext(d, r)
    X, Y = ctx.to_wreath(x), ctx.to_wreath(y)
    verdict = wreath.cp_wreath_abelian_fastpath(X, Y, ctx.A, ctx.B)
    if CROSS_CHECK.get():
        general = wreath.cp_wreath(X, Y, ctx.A, ctx.B)
        if general != verdict:
            raise VerificationError(
                f"S({d},{r}): abelian-base path says {verdict}, general path {general} for {x} ~ {y}")
    return verdict


def csp_solvable(d: int, r: int, x: Word, y: Word, budget: Optional[int] = None) -> Optional[Word]:
    if d == 1:
        return IDENTITY if abelianization(x, r) == abelianization(y, r) else None
    ctx = SolvableContext(d, r)
    z = wreath.csp_wreath(ctx.to_wreath(x), ctx.to_wreath(y), ctx.A, ctx.B)
    if z is None:
        return None
    s = lift_conjugator(z, x, y, d, r, budget=budget)
    if not magnus.wp_solvable(d, r, conj_by(s, x) * ~y):
        raise VerificationError(f"lifted conjugator {s} fails in S({d},{r})")
    return s


def _conjugates(s: Word, x: Word, y: Word, d: int, r: int) -> bool:
    return magnus.wp_solvable(d, r, conj_by(s, x) * ~y)


def lift_conjugator(z: wreath.WreathElement, x: Word, y: Word, d: int, r: int,
                    budget: Optional[int] = None) -> Word:
    """A word s with s x s^-1 = y in S(d, r), given a wreath conjugator z of the images.

    If mu(x) != 1 every conjugator of the images satisfies the fundamental
    identity, so z itself has a preimage.  If mu(x) = 1 the images are
    ``(1, u)`` and only the top of z matters, so its top word is a lift.
    A bounded search is the last resort.
    """
    ctx = SolvableContext(d, r)
    m = magnus.wreath_to_magnus(z, ctx.B, r)
    if magnus.image_membership(m):
        s = magnus.magnus_preimage(m)
        if _conjugates(s, x, y, d, r):
            log.debug("lift: preimage of the wreath conjugator")
            return s
    if _conjugates(z.top, x, y, d, r):
        log.debug("lift: top of the wreath conjugator")
        return z.top
    budget = default_budget() if budget is None else budget
    log.debug("lift: falling back to search up to length %d", budget)
    for s in words_up_to(r, budget):
        if _conjugates(s, x, y, d, r):
            return s
    raise VerificationError(
        f"no conjugator of length <= {budget} found for {x} ~ {y} in S({d},{r})")
