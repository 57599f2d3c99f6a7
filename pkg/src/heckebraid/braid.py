"""
Braid words over the Artin generators.

Letters are stored in *application order*: ``letters[0]`` is the first
crossing met when reading the diagram bottom to top.  Written as a product in
the braid group this is ``sigma_{i_N}^{e_N} ... sigma_{i_1}^{e_1}``, i.e. the
stored sequence is the right-to-left reading of the algebraic product.  The
text form lists letters in storage order as signed integers (``-2`` is
``sigma_2^{-1}``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .permutation import Permutation, right_mul_transposition

Letter = tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    """A word in ``B_n`` as a tuple of ``(generator, sign)`` letters."""

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"generator {i} out of range for {self.n} strands")
            if e not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, n: int, tokens: Iterable[int]) -> BraidWord:
        letters = []
        for k in tokens:
            if k == 0:
                raise ValueError("0 is not a braid generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(n, tuple(letters))

    def to_ints(self) -> list[int]:
        return [i * e for i, e in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        """``self * other`` applies ``self`` first, then ``other``."""
        if self.n != other.n:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.n, self.letters * k)

    def __str__(self) -> str:
        return serialize(self)

    def inverse(self) -> BraidWord:
        return inverse(self)

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def underlying_permutation(self) -> Permutation:
        return underlying_permutation(self)

    def with_strands(self, n: int) -> BraidWord:
        """Same letters, viewed in ``B_n`` for ``n >= self.n``."""
        return BraidWord(n, self.letters)


_TOKEN_SPLIT = re.compile(r"[\s,]+")


def parse(text: str, n: Optional[int] = None) -> BraidWord:
    """Parse whitespace/comma separated signed generator indices.

    Without ``n`` the strand count is one more than the largest index.

    >>> parse("1 -2 1 -2", n=3).letters
    ((1, 1), (2, -1), (1, 1), (2, -1))
    """
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    try:
        ints = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"bad braid token: {exc}") from None
    if n is None:
        if not ints:
            raise ValueError("empty braid word needs an explicit strand count")
        n = max(abs(k) for k in ints) + 1
    return BraidWord.from_ints(n, ints)


def serialize(b: BraidWord) -> str:
    return " ".join(str(k) for k in b.to_ints())


def read_braid_file(text: str) -> BraidWord:
    """Parse the two-line braid file format (``n=<strands>`` then the word)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("braid file must start with a 'n=<strands>' line")
    n = int(lines[0][2:])
    return parse(" ".join(lines[1:]), n=n)


def write_braid_file(b: BraidWord) -> str:
    return f"n={b.n}\n{serialize(b)}\n"


def inverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.n, tuple((i, -e) for i, e in reversed(b.letters)))


def positive_lift(p: Permutation) -> BraidWord:
    """Positive braid lifting a reduced word of ``p``; its length is ``l(p)``.

    Repeatedly strips the leftmost right descent: if ``w(i) > w(i+1)`` then
    ``w = w' s_i`` with ``l(w') = l(w) - 1``.  Reading the stripped
    transpositions gives ``w = s_{j_l} ... s_{j_2} s_{j_1}``, so ``j_1`` is
    the first letter applied.
    """
    w = list(p.word)
    stripped = []
    i = 0
    while i < len(w) - 1:
        if w[i] > w[i + 1]:
            w[i], w[i + 1] = w[i + 1], w[i]
            stripped.append(i + 1)
            i = max(i - 1, 0)
        else:
            i += 1
    return BraidWord(p.n, tuple((j, 1) for j in stripped))


def delta(n: int) -> BraidWord:
    """Half twist ``sigma_1 ... sigma_{n-1} sigma_1 ... sigma_{n-2} ... sigma_1``."""
    letters = []
    for top in range(n - 1, 0, -1):
        letters.extend((i, 1) for i in range(1, top + 1))
    return BraidWord(n, tuple(letters))


def delta_inverse(n: int) -> BraidWord:
    return inverse(delta(n))


def torus(p: int, q: int) -> BraidWord:
    """``(sigma_1 sigma_2 ... sigma_{p-1})^q`` on ``p`` strands."""
    if p < 2 or q < 1:
        raise ValueError("torus braid needs p >= 2 and q >= 1")
    return BraidWord(p, tuple((i, 1) for i in range(1, p)) * q)


def weaving(p: int, q: int) -> BraidWord:
    """``(sigma_1 sigma_2^-1 sigma_3 sigma_4^-1 ...)^q`` on ``p`` strands.

    Odd generators are positive and even ones negative.
    """
    if p < 2 or q < 1:
        raise ValueError("weaving braid needs p >= 2 and q >= 1")
    period = tuple((i, 1 if i % 2 else -1) for i in range(1, p))
    return BraidWord(p, period * q)


def underlying_permutation(b: BraidWord) -> Permutation:
    """Image in ``S_n`` (signs forgotten): the product of the ``s_i`` letters.

    Returned as ``s_{i_N} ... s_{i_1}`` to match the Hecke convention in which
    ``positive_lift(w)`` maps back to ``w``.
    """
    w = Permutation.identity(b.n)
    # s_{i_N} ... s_{i_1} = ((id * s_{i_N}) * ...) * s_{i_1}
    for i, _ in reversed(b.letters):
        w = right_mul_transposition(w, i)
    return w


def component_count(b: BraidWord) -> int:
    """Number of components of the closure."""
    return len(underlying_permutation(b).cycles())


def is_knot(b: BraidWord) -> bool:
    return component_count(b) == 1


def torus_is_knot(p: int, q: int) -> bool:
    return gcd(p, q) == 1
