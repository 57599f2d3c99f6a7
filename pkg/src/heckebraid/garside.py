"""
Garside letters (positive lifts of permutations) and normal-form words.

A Garside word ``b_1, ..., b_k`` is stored first-applied-first, so the braid is
the product ``b_k ... b_1``.  Adjacent letters are in normal form when every
right descent of the later letter is a left descent of the earlier one; all
divisibility questions in ``[1, Delta]`` reduce to descent sets in ``S_n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .braid import BraidWord, delta, delta_inverse, positive_lift
from .permutation import Fenwick, Permutation, all_permutations, length


def is_compatible(s: Permutation, s_next: Permutation) -> bool:
    """Can ``s_next`` follow ``s`` in a normal form?

    True iff ``s_next`` is not the identity and for every ``i`` with
    ``s_next(i) > s_next(i+1)`` also ``s^-1(i) > s^-1(i+1)``.
    """
    if s.n != s_next.n:
        raise ValueError("letters live in different symmetric groups")
    if s_next.is_identity():
        return False
    inv = s.inverse().word
    w = s_next.word
    return all(inv[i] > inv[i + 1] for i in range(s.n - 1) if w[i] > w[i + 1])


def compatible_letters(s: Permutation) -> list[Permutation]:
    """Brute-force list of every letter allowed after ``s``."""
    return [p for p in all_permutations(s.n) if is_compatible(s, p)]


def _blocks(s: Permutation) -> list[tuple[int, int]]:
    """Maximal position intervals on which a compatible letter must increase.

    A break falls between ``i`` and ``i+1`` exactly when ``i`` is a left
    descent of ``s``; returned as half-open 0-based ``(start, stop)``.
    """
    inv = s.inverse().word
    out = []
    start = 0
    for i in range(s.n - 1):
        if inv[i] > inv[i + 1]:
            out.append((start, i + 1))
            start = i + 1
    out.append((start, s.n))
    return out


def sample_extension(s: Permutation, rng: random.Random) -> Permutation:
    """Uniform random letter among those compatible with ``s``.

    Values are dealt to positions by rank selection from the shrinking set of
    unused values, then sorted inside each block so no two strands of a block
    cross.  Every compatible letter arises from the same number of deals, so
    the result is uniform; the identity is redrawn.
    """
    n = s.n
    blocks = _blocks(s)
    if len(blocks) == 1:
        raise ValueError("only the identity follows a letter with no left descent")
    while True:
        remaining = Fenwick(n)
        dealt = []
        for left in range(n, 0, -1):
            v = remaining.select(rng.randrange(left) + 1)
            remaining.add(v, -1)
            dealt.append(v)
        word = []
        for start, stop in blocks:
            word.extend(sorted(dealt[start:stop]))
        p = Permutation._trusted(tuple(word))
        if not p.is_identity():
            return p


@dataclass(frozen=True)
class GarsideWord:
    """Positive braid as a sequence of non-identity permutation letters."""

    n: int
    letters: tuple[Permutation, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for p in letters:
            if p.n != self.n:
                raise ValueError("letter size does not match strand count")
            if p.is_identity():
                raise ValueError("identity is not a Garside letter")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def extend(self, p: Permutation) -> GarsideWord:
        return GarsideWord(self.n, self.letters + (p,))

    @property
    def last(self) -> Permutation:
        return self.letters[-1]

    def crossing_count(self) -> int:
        return sum(length(p) for p in self.letters)


def is_normal_form(g: GarsideWord) -> bool:
    return all(is_compatible(a, b) for a, b in zip(g.letters, g.letters[1:]))


def to_braid(g: GarsideWord) -> BraidWord:
    """Artin word: positive lifts of the letters, first letter applied first."""
    letters = []
    for p in g.letters:
        letters.extend(positive_lift(p).letters)
    return BraidWord(g.n, tuple(letters))


def with_delta_power(g: GarsideWord, r: int) -> BraidWord:
    """Artin word of ``Delta^r b`` (the positive part applied first)."""
    tail = delta(g.n) if r >= 0 else delta_inverse(g.n)
    return to_braid(g) * BraidWord(g.n, tail.letters * abs(r))


def format_garside(g: GarsideWord, delta_power: int = 0) -> str:
    lines = [f"n={g.n} delta_power={delta_power}"]
    lines.extend(str(p) for p in g.letters)
    return "\n".join(lines) + "\n"


def parse_garside(text: str) -> tuple[GarsideWord, int]:
    """Inverse of :func:`format_garside`; returns ``(word, delta_power)``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty Garside word file")
    header = dict(tok.split("=", 1) for tok in lines[0].split())
    n = int(header["n"])
    r = int(header.get("delta_power", 0))
    return GarsideWord(n, tuple(Permutation.parse(ln) for ln in lines[1:])), r


def letters_from(n: int, words: Iterable[Sequence[int]]) -> GarsideWord:
    return GarsideWord(n, tuple(Permutation(w) for w in words))
