"""Brute-force ground truth: full tables of finite wreath products Z/m wr Z/n and
bounded conjugator search by enumeration."""
from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import groups
from .errors import SizeExceededError
from .groups import FiniteCyclic, GroupDescriptor
from .words import Word, conj_by, words_up_to
from .wreath import WreathElement, make_element

DEFAULT_BOUND = 10 ** 5

# an element is (top residue, values indexed by the residues of B)
Encoding = Tuple[int, Tuple[int, ...]]


@dataclass
class FiniteGroupTable:
    A: FiniteCyclic
    B: FiniteCyclic
    elements: List[Encoding]
    mul: List[List[int]]
    inv: List[int]
    index: Dict[Encoding, int] = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.elements)


def _wreath_mul(x: Encoding, y: Encoding, m: int, n: int) -> Encoding:
    # (b, f)(c, g) = (b + c, f^c + g) with f^c(p) = f(p - c)
    (b, f), (c, g) = x, y
    return (b + c) % n, tuple((f[(p - c) % n] + g[p]) % m for p in range(n))


def enumerate_finite_wreath(A: FiniteCyclic, B: FiniteCyclic, bound: int = DEFAULT_BOUND) -> FiniteGroupTable:
    m, n = A.modulus, B.modulus
    size = n * m ** n
    if size > bound:
        raise SizeExceededError(f"|{A} wr {B}| = {size} exceeds {bound}")
    # identity first: top 0, all values 0
    elements = [(b, f) for b in range(n) for f in itertools.product(range(m), repeat=n)]
    index = {e: i for i, e in enumerate(elements)}
    mul = [[index[_wreath_mul(x, y, m, n)] for y in elements] for x in elements]
    inv = [row.index(0) for row in mul]
    return FiniteGroupTable(A, B, elements, mul, inv, index)


def brute_conjugacy(T: FiniteGroupTable, x: int, y: int) -> Optional[int]:
    """First z (by index) with z x z^-1 = y."""
    mul, inv = T.mul, T.inv
    for z in range(len(T)):
        if mul[mul[z][x]][inv[z]] == y:
            return z
    return None


def conjugacy_classes(T: FiniteGroupTable) -> List[List[int]]:
    seen = set()
    classes = []
    for x in range(len(T)):
        if x in seen:
            continue
        cls = sorted({T.mul[T.mul[z][x]][T.inv[z]] for z in range(len(T))})
        seen.update(cls)
        classes.append(cls)
    return classes


def to_element(T: FiniteGroupTable, i: int) -> WreathElement:
    b, f = T.elements[i]
    return make_element(Word((1,) * b), [(Word((1,) * p), Word((1,) * v)) for p, v in enumerate(f)],
                        T.A, T.B)


def from_element(T: FiniteGroupTable, e: WreathElement) -> int:
    n = T.B.modulus
    values = [0] * n
    for k, v in e.support:
        values[groups.key(T.B, k)] = groups.key(T.A, v)
    return T.index[(groups.key(T.B, e.top), tuple(values))]


def write_classes_csv(T: FiniteGroupTable, path) -> None:
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["class", "index", "top", "values"])
        for c, cls in enumerate(conjugacy_classes(T)):
            for i in cls:
                b, f = T.elements[i]
                out.writerow([c, i, b, " ".join(map(str, f))])


def conjugate_orbit(G: GroupDescriptor, x: Word, max_len: int) -> Dict[object, Word]:
    """Map key(s x s^-1) -> first s (shortlex) for all reduced s with |s| <= max_len."""
    orbit = {}
    for s in words_up_to(G.rank, max_len):
        orbit.setdefault(groups.key(G, conj_by(s, x)), s)
    return orbit


def bounded_conjugator_search(G: GroupDescriptor, x: Word, y: Word, max_len: int) -> Optional[Word]:
    """First s with |s| <= max_len and s x s^-1 = y in G.  None proves nothing."""
    ky = groups.key(G, y)
    for s in words_up_to(G.rank, max_len):
        if groups.key(G, conj_by(s, x)) == ky:
            return s
    return None
