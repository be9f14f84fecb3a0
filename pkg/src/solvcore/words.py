"""Freely reduced words over a signed alphabet.

A letter is a nonzero int: ``i`` is generator ``x_i`` and ``-i`` its inverse.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import AlphabetError, ParseError

Letter = Union[int, tuple]


def _reduce(letters: Iterable[int]) -> tuple:
    out = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def _reduced(cls, letters: tuple) -> "Word":
        # caller guarantees `letters` is already freely reduced
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def gen(cls, i: int) -> "Word":
        return cls._reduced((i,))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** -n
        # a reduced word need not be cyclically reduced, so reduce the product
        return Word(self.letters * n)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    @property
    def rank(self) -> int:
        """Largest generator index used (0 for the empty word)."""
        return max((abs(a) for a in self.letters), default=0)

    def prefix(self, n: int) -> "Word":
        return Word._reduced(self.letters[:n])


IDENTITY = Word()


def normalize(raw: Sequence[Letter], rank: Optional[int] = None) -> Word:
    """Freely reduce `raw`; items are signed ints or ``(gen, sign)`` pairs."""
    letters = []
    for item in raw:
        if isinstance(item, tuple):
            gen, sign = item
            if sign not in (1, -1):
                raise AlphabetError(f"bad sign {sign!r}")
            a = gen * sign
        else:
            a = int(item)
        if a == 0:
            raise AlphabetError("generator index 0")
        if rank is not None and abs(a) > rank:
            raise AlphabetError(f"generator {abs(a)} outside rank {rank}")
        letters.append(a)
    return Word(tuple(letters))


def concat(u: Word, v: Word) -> Word:
    a, b = u.letters, v.letters
    k = 0
    n = min(len(a), len(b))
    while k < n and a[-1 - k] == -b[k]:
        k += 1
    return Word._reduced(a[: len(a) - k] + b[k:])


def invert(w: Word) -> Word:
    return Word._reduced(tuple(-a for a in reversed(w.letters)))


def conj_by(s: Word, w: Word) -> Word:
    """s w s^-1."""
    return concat(concat(s, w), invert(s))


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return concat(concat(u, v), concat(invert(u), invert(v)))


def check_rank(w: Word, rank: int) -> Word:
    if w.rank > rank:
        raise AlphabetError(f"word {w} uses generator {w.rank} but the alphabet has rank {rank}")
    return w


def reduced_words(rank: int, length: int) -> Iterator[Word]:
    """All reduced words of exactly `length` letters, in shortlex order."""
    alphabet = [a for i in range(1, rank + 1) for a in (i, -i)]

    def extend(prefix):
        if len(prefix) == length:
            yield Word._reduced(tuple(prefix))
            return
        for a in alphabet:
            if prefix and prefix[-1] == -a:
                continue
            prefix.append(a)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def words_up_to(rank: int, max_length: int) -> Iterator[Word]:
    return itertools.chain.from_iterable(reduced_words(rank, n) for n in range(max_length + 1))


def random_word(rank: int, length: int, rng) -> Word:
    """A uniformly random reduced word of exactly `length` letters."""
    letters = []
    while len(letters) < length:
        a = rng.randint(1, rank) * rng.choice((1, -1))
        if letters and letters[-1] == -a:
            continue
        letters.append(a)
    return Word._reduced(tuple(letters))


# text syntax: x3 / X3 for generator 3 and its inverse; y/Y for the top group
# of a wreath product, whose letters are shifted by `split`.
_TOKEN = re.compile(r"([xXyY])(\d+)$")


def parse_word(text: str, rank: int, split: Optional[int] = None) -> Word:
    letters = []
    pos = 0
    for tok in text.split():
        pos = text.index(tok, pos)
        if tok in ("1", "e"):
            pos += len(tok)
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad token {tok!r}", text, pos)
        kind, idx = m.group(1), int(m.group(2))
        if idx == 0:
            raise ParseError("generator index 0", text, pos)
        sign = 1 if kind.islower() else -1
        if kind in "yY":
            if split is None:
                raise ParseError(f"token {tok!r} needs a wreath product group", text, pos)
            idx += split
        elif split is not None and idx > split:
            raise AlphabetError(f"x{idx} outside the base group alphabet (rank {split})")
        if idx > rank:
            raise AlphabetError(f"{tok} outside alphabet of rank {rank}")
        letters.append(sign * idx)
        pos += len(tok)
    return Word(tuple(letters))


def _token(a: int, split: Optional[int]) -> str:
    i = abs(a)
    if split is not None and i > split:
        name = "y" if a > 0 else "Y"
        return f"{name}{i - split}"
    return f"{'x' if a > 0 else 'X'}{i}"


def format_word(w: Word, split: Optional[int] = None) -> str:
    if not w.letters:
        return "1"
    return " ".join(_token(a, split) for a in w.letters)


def format_top(w: Word) -> str:
    """Format a word of the top group of a wreath product (y letters)."""
    return format_word(w, split=0)
