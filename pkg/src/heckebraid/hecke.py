"""
The Hecke representation of the braid group in the ``{T_w}`` basis.

``psi(b)`` is held as a dense list of ``n!`` Laurent polynomials; slot ``j``
is the coefficient of ``T_w`` for the permutation ``w`` of index ``j``.
Applying ``sigma_i^{+-1}`` on the left mixes each pair of slots
``(w, s_i w)`` and nothing else:

    T_i   T_w = T_{s_i w}                          if l(s_i w) > l(w)
    T_i   T_w = (1 - q^2) T_w + q^2 T_{s_i w}       otherwise
    T_i^-1 T_w = (1 - q^-2) T_w + q^-2 T_{s_i w}    if l(s_i w) > l(w)
    T_i^-1 T_w = T_{s_i w}                          otherwise

so one pass over the pairs with ``l(s_i w) > l(w)`` updates the vector in
place.  Pairs are disjoint, which makes the pass safe to split across workers.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Optional, Sequence

from .braid import BraidWord
from .laurent import ZZ, LaurentPoly, Ring
from .permutation import MAX_STRANDS, Permutation, from_index, to_index

# pair tables are cached up to this strand count (8! / 2 pairs per generator)
TABLE_MAX_N = 8


class HeckeVector:
    """Coordinates of an element of ``H_n`` over ``ring[q, q^-1]``."""

    __slots__ = ("n", "ring", "coords")

    def __init__(self, n: int, ring: Ring, coords: list):
        if len(coords) != factorial(n):
            raise ValueError(f"expected {factorial(n)} coordinates, got {len(coords)}")
        self.n = n
        self.ring = ring
        self.coords = coords

    def copy(self) -> HeckeVector:
        return HeckeVector(self.n, self.ring, list(self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, j: int) -> LaurentPoly:
        return self.coords[j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeVector):
            return NotImplemented
        return (self.n == other.n and self.ring == other.ring
                and self.coords == other.coords)

    def __repr__(self) -> str:
        return f"HeckeVector(n={self.n}, ring={self.ring}, nonzero={len(self.support())})"

    def support(self) -> list[int]:
        return [j for j, a in enumerate(self.coords) if a]

    def nonzero(self) -> Iterator[tuple[int, LaurentPoly]]:
        for j, a in enumerate(self.coords):
            if a:
                yield j, a

    def change_ring(self, ring: Ring) -> HeckeVector:
        return HeckeVector(self.n, ring, [a.change_ring(ring) for a in self.coords])

    def dump(self) -> str:
        """Tab-separated ``index, one-line word, polynomial`` per nonzero slot."""
        lines = [f"{j}\t{from_index(j, self.n)}\t{a}" for j, a in self.nonzero()]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "modulus": self.ring.modulus,
            "coordinates": [
                {"index": j, "word": str(from_index(j, self.n)), "poly": str(a)}
                for j, a in self.nonzero()
            ],
        }

    def dumps_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def identity_vector(n: int, ring: Ring = ZZ) -> HeckeVector:
    if not 1 <= n <= MAX_STRANDS:
        raise ValueError(f"strand count must be in [1, {MAX_STRANDS}], got {n}")
    if n > 10:
        raise MemoryError(f"a dense vector of {factorial(n)} coordinates is not practical")
    zero = LaurentPoly.zero(ring)
    coords = [zero] * factorial(n)
    coords[0] = LaurentPoly.one(ring)
    return HeckeVector(n, ring, coords)


def unit_vector(w: Permutation, ring: Ring = ZZ) -> HeckeVector:
    """``T_w`` with coefficient 1."""
    v = identity_vector(w.n, ring)
    v.coords[0] = LaurentPoly.zero(ring)
    v.coords[to_index(w)] = LaurentPoly.one(ring)
    return v


def _scan_pairs(n: int, i: int) -> Iterator[tuple[int, int]]:
    """Yield ``(index(w), index(s_i w))`` for every ``w`` with ``l(s_i w) > l(w)``.

    Permutations come out of :func:`itertools.permutations` in lex order, which
    is index order.  Swapping the values ``i, i+1`` (with ``i`` first) raises
    the Lehmer digit at the position of ``i`` by one and leaves the others
    alone, so the partner index is ``j + (n - pos)!``.
    """
    weights = [factorial(n - 1 - pos) for pos in range(n)]
    for j, w in enumerate(permutations(range(1, n + 1))):
        pos = w.index(i)
        if pos < w.index(i + 1):
            yield j, j + weights[pos]


@lru_cache(maxsize=None)
def _pair_table(n: int, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lows, highs = [], []
    for j, k in _scan_pairs(n, i):
        lows.append(j)
        highs.append(k)
    return tuple(lows), tuple(highs)


def pairs(n: int, i: int) -> tuple[Sequence[int], Sequence[int]]:
    """Slot pairs touched by ``sigma_i``: parallel lists of low and high indices."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator {i} out of range for {n} strands")
    if n <= TABLE_MAX_N:
        return _pair_table(n, i)
    lows, highs = [], []
    for j, k in _scan_pairs(n, i):
        lows.append(j)
        highs.append(k)
    return lows, highs


def _update_positive(coords: list, lows: Sequence[int], highs: Sequence[int]) -> None:
    for j, k in zip(lows, highs):
        aw = coords[j]
        asw = coords[k]
        if not asw.coeffs:
            if aw.coeffs:
                coords[j] = asw
                coords[k] = aw
            continue
        shifted = asw.shift(2)
        coords[j] = shifted
        coords[k] = aw + asw - shifted


def _update_negative(coords: list, lows: Sequence[int], highs: Sequence[int]) -> None:
    for j, k in zip(lows, highs):
        aw = coords[j]
        asw = coords[k]
        if not aw.coeffs:
            if asw.coeffs:
                coords[j] = asw
                coords[k] = aw
            continue
        shifted = aw.shift(-2)
        coords[j] = aw - shifted + asw
        coords[k] = shifted


def apply_generator(v: HeckeVector, i: int, sign: int,
                    threads: int = 1, executor: Optional[ThreadPoolExecutor] = None) -> HeckeVector:
    """Replace ``v`` by ``T_i^sign v`` in place and return it.

    With ``threads > 1`` the pair list is cut into contiguous chunks handled by
    separate workers; every pair belongs to exactly one chunk so writes never
    collide and the result is identical to the sequential pass.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    lows, highs = pairs(v.n, i)
    update = _update_positive if sign == 1 else _update_negative
    if threads <= 1 or len(lows) < 2 * threads:
        update(v.coords, lows, highs)
        return v
    size = -(-len(lows) // threads)
    chunks = [(lows[s:s + size], highs[s:s + size]) for s in range(0, len(lows), size)]
    own = executor is None
    pool = executor or ThreadPoolExecutor(max_workers=threads)
    try:
        for fut in [pool.submit(update, v.coords, lo, hi) for lo, hi in chunks]:
            fut.result()
    finally:
        if own:
            pool.shutdown()
    return v


def represent(b: BraidWord, ring: Ring = ZZ, threads: int = 1,
              start: Optional[HeckeVector] = None) -> HeckeVector:
    """Coordinates of ``psi(b)``; with ``start`` computes ``psi(b) * start``.

    Letters are applied in storage order, each as a left multiplication.
    """
    v = identity_vector(b.n, ring) if start is None else start.copy()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, e in b.letters:
                apply_generator(v, i, e, threads, pool)
    else:
        for i, e in b.letters:
            apply_generator(v, i, e)
    return v


def projlength(v: HeckeVector) -> int:
    """``max deg(a_w) - min val(a_w)`` over the nonzero coordinates."""
    top = None
    bottom = None
    for a in v.coords:
        if a.coeffs:
            d = a.val + len(a.coeffs) - 1
            if top is None or d > top:
                top = d
            if bottom is None or a.val < bottom:
                bottom = a.val
    if top is None:
        raise ValueError("projlength of the zero vector is undefined")
    return top - bottom


def has_negative_degree(v: HeckeVector) -> bool:
    """True when some nonzero coordinate has all its terms at negative exponents."""
    return any(a.coeffs and a.val + len(a.coeffs) - 1 < 0 for a in v.coords)


def is_trivial(v: HeckeVector) -> bool:
    """True iff ``v`` is the identity ``T_id``."""
    c = v.coords
    return c[0].is_one() and not any(a.coeffs for a in c[1:])


def single_unit_coordinate(v: HeckeVector) -> Optional[int]:
    """Index of the only nonzero coordinate when it equals 1, else ``None``."""
    found = None
    for j, a in enumerate(v.coords):
        if a.coeffs:
            if found is not None or not a.is_one():
                return None
            found = j
    return found
