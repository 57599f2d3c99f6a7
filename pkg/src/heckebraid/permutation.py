"""
Symmetric-group elements and their factorial-number-system encoding.

A permutation ``w`` of ``{1, ..., n}`` is held as its one-line word
``w(1) w(2) ... w(n)``.  Its *index* is the integer

    F(w) = sum_i L_i * (n - i)!

where ``L`` is the Lehmer code, ``L_i = #{j > i : w(j) < w(i)}``.  The map
``w -> F(w)`` is a bijection onto ``[0, n!)`` which is increasing for the
lexicographic order of one-line words, so the index can address an array of
length ``n!`` in lex order.

Both directions are O(n log n) through a Fenwick tree over an occupancy array.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

MAX_STRANDS = 20


class Fenwick:
    """Binary indexed tree over 0/1 occupancy counts with rank and select."""

    __slots__ = ("_n", "_tree", "_top")

    def __init__(self, n: int, full: bool = True):
        self._n = n
        self._tree = [0] * (n + 1)
        if full:
            for i in range(1, n + 1):
                self._tree[i] += 1
                parent = i + (i & -i)
                if parent <= n:
                    self._tree[parent] += self._tree[i]
        self._top = 1 << max(n.bit_length() - 1, 0)

    def add(self, pos: int, delta: int) -> None:
        """Add ``delta`` to the count at 1-based ``pos``."""
        n, tree = self._n, self._tree
        while pos <= n:
            tree[pos] += delta
            pos += pos & -pos

    def prefix(self, pos: int) -> int:
        """Sum of counts at positions ``1..pos``."""
        tree = self._tree
        total = 0
        while pos > 0:
            total += tree[pos]
            pos -= pos & -pos
        return total

    def select(self, k: int) -> int:
        """Smallest 1-based position whose prefix sum reaches ``k`` (k >= 1)."""
        n, tree = self._n, self._tree
        pos = 0
        step = self._top
        while step:
            nxt = pos + step
            if nxt <= n and tree[nxt] < k:
                pos = nxt
                k -= tree[nxt]
            step >>= 1
        return pos + 1


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_STRANDS:
        raise ValueError(f"strand count must be in [1, {MAX_STRANDS}], got {n}")


class Permutation:
    """Immutable permutation of ``{1, ..., n}`` stored as a one-line word.

    Composition follows function composition: ``(p * r)(x) = p(r(x))``, so
    ``s_i * w`` swaps the *values* ``i, i+1`` of ``w`` and ``w * s_i`` swaps
    its *positions* ``i, i+1``.
    """

    __slots__ = ("word", "_hash")

    def __init__(self, word: Iterable[int]):
        word = tuple(int(x) for x in word)
        n = len(word)
        _check_n(n)
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {word}")
        self.word = word
        self._hash = hash(word)

    @classmethod
    def _trusted(cls, word: tuple) -> Permutation:
        p = object.__new__(cls)
        p.word = word
        p._hash = hash(word)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        _check_n(n)
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        """The longest element ``w0 = n n-1 ... 1``."""
        _check_n(n)
        return cls._trusted(tuple(range(n, 0, -1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The simple transposition ``s_i``."""
        return cls.identity(n).right_mul(i)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(int(tok) for tok in text.replace(",", " ").split())

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, x: int) -> int:
        return self.word[x - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.word == other.word

    def __lt__(self, other: Permutation) -> bool:
        return compare_lex(self, other) < 0

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        w = self.word
        return Permutation._trusted(tuple(w[x - 1] for x in other.word))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.word, 1):
            inv[val - 1] = pos
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, 1))

    def lehmer_code(self) -> tuple[int, ...]:
        return lehmer_code(self)

    def index(self) -> int:
        return to_index(self)

    def length(self) -> int:
        return length(self)

    def left_mul(self, i: int) -> Permutation:
        return left_mul_transposition(i, self)

    def right_mul(self, i: int) -> Permutation:
        return right_mul_transposition(self, i)

    def cycles(self) -> list[list[int]]:
        return cycles(self)

    def right_descents(self) -> frozenset[int]:
        """Positions ``i`` with ``w(i) > w(i+1)``, i.e. ``l(w s_i) < l(w)``."""
        w = self.word
        return frozenset(i for i in range(1, self.n) if w[i - 1] > w[i])

    def left_descents(self) -> frozenset[int]:
        """Values ``i`` placed after ``i+1``, i.e. ``l(s_i w) < l(w)``."""
        return self.inverse().right_descents()


def lehmer_code(p: Permutation) -> tuple[int, ...]:
    """Return ``(L_1, ..., L_n)`` with ``L_i = #{j > i : w(j) < w(i)}``.

    Scans right to left, counting already-seen smaller values in a Fenwick
    tree.

    >>> lehmer_code(Permutation([3, 2, 1]))
    (2, 1, 0)
    """
    n = p.n
    seen = Fenwick(n, full=False)
    code = [0] * n
    for pos in range(n - 1, -1, -1):
        v = p.word[pos]
        code[pos] = seen.prefix(v - 1)
        seen.add(v, 1)
    return tuple(code)


def to_index(p: Permutation) -> int:
    """Factorial-number-system index of ``p``; lex rank among ``S_n``.

    >>> to_index(Permutation([3, 2, 1]))
    5
    """
    n = p.n
    remaining = Fenwick(n)
    index = 0
    for pos, v in enumerate(p.word):
        # Horner: index = index * (n - pos) + L_pos
        index = index * (n - pos) + remaining.prefix(v - 1)
        remaining.add(v, -1)
    return index


def from_index(index: int, n: int) -> Permutation:
    """Inverse of :func:`to_index`.

    Raises
    ------
    ValueError
        If ``index`` is outside ``[0, n!)``.
    """
    _check_n(n)
    if not 0 <= index < factorial(n):
        raise ValueError(f"index {index} out of range for n={n}")
    code = [0] * n
    x = index
    for pos in range(n - 1, -1, -1):
        radix = n - pos
        x, code[pos] = divmod(x, radix)
    remaining = Fenwick(n)
    word = []
    for c in code:
        v = remaining.select(c + 1)
        remaining.add(v, -1)
        word.append(v)
    return Permutation._trusted(tuple(word))


def length(p: Permutation) -> int:
    """Coxeter length: the number of inversions."""
    return sum(lehmer_code(p))


def _check_generator(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range [1, {n - 1}]")


def left_mul_transposition(i: int, p: Permutation) -> Permutation:
    """Return ``s_i * p``: the values ``i`` and ``i+1`` trade places."""
    _check_generator(i, p.n)
    word = tuple(i + 1 if v == i else i if v == i + 1 else v for v in p.word)
    return Permutation._trusted(word)


def right_mul_transposition(p: Permutation, i: int) -> Permutation:
    """Return ``p * s_i``: the entries at positions ``i`` and ``i+1`` swap."""
    _check_generator(i, p.n)
    w = list(p.word)
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation._trusted(tuple(w))


def cycles(p: Permutation) -> list[list[int]]:
    """Disjoint cycle decomposition, fixed points included.

    Each cycle starts at its smallest point and follows ``x -> p(x)``; cycles
    are ordered by their smallest point.
    """
    seen = [False] * (p.n + 1)
    out = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p.word[x - 1]
        out.append(cyc)
    return out


def compare_lex(p: Permutation, r: Permutation) -> int:
    """Three-way lexicographic comparison of one-line words (-1, 0, 1)."""
    if p.n != r.n:
        raise ValueError("cannot compare permutations of different sizes")
    return (p.word > r.word) - (p.word < r.word)


def all_permutations(n: int) -> Sequence[Permutation]:
    """All of ``S_n`` in index order."""
    return _all_permutations(n)


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> tuple[Permutation, ...]:
    from itertools import permutations

    _check_n(n)
    return tuple(Permutation._trusted(w) for w in permutations(range(1, n + 1)))
