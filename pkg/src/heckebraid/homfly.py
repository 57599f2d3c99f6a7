"""
HOMFLY-PT polynomials of braid closures through the trace on ``H_n``.

Normalisation: a closed unknot is ``d = (a - a^-1)/(q - q^-1)``, a positive
kink multiplies by ``a^-1 q`` and crossings satisfy the Hecke quadratic
relation, i.e. ``q^-1 P(L+) - q P(L-) = (q^-1 - q) P(L0)``.  ``d`` is kept as
a formal third variable.

The trace computation only produces terms ``a^(k-n) q^j d^k`` for a braid on
``n`` strands, and that form is unique, so two results coming out of
:func:`homfly` can be compared term by term.  Values built any other way (the
skein oracle for instance) need :meth:`HomflyPoly.equivalent`, which compares
the underlying rational functions.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from functools import lru_cache
from typing import Mapping, Optional

from .braid import BraidWord, component_count
from .hecke import HeckeVector, represent
from .laurent import ZZ, LaurentPoly
from .permutation import Permutation, cycles, from_index, to_index


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured budget."""


Key = tuple[int, int, int]  # (a exponent, q exponent, d power)


class HomflyPoly:
    """Integer combination of monomials ``a^i q^j d^k``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Key, int]] = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, a: int = 0, q: int = 0, d: int = 0, c: int = 1) -> HomflyPoly:
        return cls({(a, q, d): c})

    @classmethod
    def from_q_poly(cls, p: LaurentPoly, a: int = 0, d: int = 0) -> HomflyPoly:
        """``p(q) * a^a * d^d``."""
        return cls({(a, e, d): c for e, c in p.terms().items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomflyPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: HomflyPoly) -> HomflyPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return HomflyPoly(out)

    def __neg__(self) -> HomflyPoly:
        return HomflyPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: HomflyPoly) -> HomflyPoly:
        return self + (-other)

    def __mul__(self, other) -> HomflyPoly:
        if isinstance(other, int):
            return HomflyPoly({k: c * other for k, c in self.terms.items()})
        if isinstance(other, LaurentPoly):
            other = HomflyPoly.from_q_poly(other)
        out: dict = defaultdict(int)
        for (a1, q1, d1), c1 in self.terms.items():
            for (a2, q2, d2), c2 in other.terms.items():
                out[(a1 + a2, q1 + q2, d1 + d2)] += c1 * c2
        return HomflyPoly(out)

    __rmul__ = __mul__

    def shift(self, a: int = 0, q: int = 0, d: int = 0) -> HomflyPoly:
        """Multiply by the monomial ``a^a q^q d^d``."""
        return HomflyPoly({(i + a, j + q, k + d): c for (i, j, k), c in self.terms.items()})

    def max_d_power(self) -> int:
        return max((k for _, _, k in self.terms), default=0)

    def min_d_power(self) -> int:
        return min((k for _, _, k in self.terms), default=0)

    def cleared(self, power: Optional[int] = None) -> dict[tuple[int, int], int]:
        """Numerator in ``Z[a^+-1, q^+-1]`` after multiplying by ``(q - q^-1)^power``.

        Each ``d^k`` becomes ``(a - a^-1)^k (q - q^-1)^(power - k)``.
        """
        if power is None:
            power = self.max_d_power()
        out: dict = defaultdict(int)
        for (i, j, k), c in self.terms.items():
            if k > power:
                raise ValueError("clearing power is below the largest d power")
            for (da, cq), ca in _binomial_pairs(k):
                for (dq, _), cb in _binomial_pairs(power - k):
                    out[(i + da, j + dq)] += c * ca * cb
        return {key: c for key, c in out.items() if c}

    def equivalent(self, other: HomflyPoly) -> bool:
        """Equality as rational functions once ``d`` is substituted."""
        power = max(self.max_d_power(), other.max_d_power())
        return self.cleared(power) == other.cleared(power)

    def reduced(self) -> HomflyPoly:
        """Divide by one factor of ``d`` (requires every term to carry one)."""
        if self.terms and self.min_d_power() < 1:
            raise ValueError("polynomial has terms without a factor of d")
        return self.shift(d=-1)

    def __repr__(self) -> str:
        return f"HomflyPoly({self})"

    def __str__(self) -> str:
        return format_homfly(self)

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c, "a": i, "q": j, "d": k}
            for (i, j, k), c in sorted(self.terms.items(), key=_order)
        ]


def _order(item):
    (i, j, k), _ = item
    return (k, i, j)


@lru_cache(maxsize=None)
def _binomial_pairs(k: int) -> tuple:
    """Expansion of ``(x - x^-1)^k`` as ``((exponent, 0), coeff)`` entries."""
    from math import comb

    return tuple(((k - 2 * r, 0), (-1) ** r * comb(k, r)) for r in range(k + 1))


def format_homfly(p: HomflyPoly) -> str:
    """``c * a^i * q^j * d^k`` terms sorted by ``(k, i, j)``, joined by `` + ``."""
    if not p.terms:
        return "0"
    return " + ".join(
        f"{c} * a^{i} * q^{j} * d^{k}" for (i, j, k), c in sorted(p.terms.items(), key=_order)
    )


_HOMFLY_TERM = re.compile(
    r"^(-?\d+)\s*\*\s*a\^(-?\d+)\s*\*\s*q\^(-?\d+)\s*\*\s*d\^(-?\d+)$"
)


def parse_homfly(text: str) -> HomflyPoly:
    text = text.strip()
    if text == "0":
        return HomflyPoly()
    terms: dict = defaultdict(int)
    for chunk in text.split(" + "):
        m = _HOMFLY_TERM.match(chunk.strip())
        if not m:
            raise ValueError(f"cannot parse HOMFLY term {chunk!r}")
        c, i, j, k = map(int, m.groups())
        terms[(i, j, k)] += c
    return HomflyPoly(terms)


def homfly_from_json(data) -> HomflyPoly:
    if isinstance(data, str):
        data = json.loads(data)
    return HomflyPoly({(t["a"], t["q"], t["d"]): t["coeff"] for t in data})


# -- trace reduction ----------------------------------------------------------

def _positions(word: tuple) -> list[int]:
    pos = [0] * (len(word) + 1)
    for i, v in enumerate(word, 1):
        pos[v] = i
    return pos


def is_annularly_reduced(p: Permutation) -> bool:
    """True iff every value ``i`` sits at a position ``>= i - 1``.

    These are products of the cycles ``i -> i+1 -> ... -> j -> i`` on
    consecutive blocks (one-line blocks ``2 3 ... l 1``), whose positive lifts
    use each generator of the block once.
    """
    pos = _positions(p.word)
    return all(pos[i] >= i - 1 for i in range(1, p.n + 1))


def _first_pivot(pos: list[int]) -> Optional[int]:
    for i in range(1, len(pos)):
        if pos[i] < i - 1:
            return i
    return None


def trace_reduce(v: HeckeVector) -> HeckeVector:
    """Push every coordinate onto annularly reduced permutations.

    Scans indices from high to low.  For a non-reduced ``w`` let ``i0`` be the
    smallest value placed before position ``i0 - 1`` and ``s = s_{i0-1}``.
    Then ``i0`` comes before ``i0 - 1`` in ``w``, so ``w = s w'`` with
    ``l(w') = l(w) - 1``, and in the trace ``T_w = T_s T_{w'} ~ T_{w'} T_s``:

        T_{w'} T_s = T_{w's}                            if l(w's) > l(w')
        T_{w'} T_s = (1 - q^2) T_{w'} + q^2 T_{w's}      otherwise

    Both ``w'`` and ``w's`` are lex-smaller than ``w``, so they are handled
    later in the same scan.  Returns a new vector.
    """
    out = v.copy()
    c = out.coords
    n = v.n
    zero = LaurentPoly.zero(v.ring)
    for j in range(len(c) - 1, -1, -1):
        a = c[j]
        if not a.coeffs:
            continue
        word = from_index(j, n).word
        pos = _positions(word)
        i0 = _first_pivot(pos)
        if i0 is None:
            continue
        s = i0 - 1
        # w' = s w: swap the values s and s+1
        wp = [s + 1 if x == s else s if x == s + 1 else x for x in word]
        # w' s: swap positions s and s+1
        wps = list(wp)
        wps[s - 1], wps[s] = wps[s], wps[s - 1]
        k_wp = to_index(Permutation._trusted(tuple(wp)))
        k_wps = to_index(Permutation._trusted(tuple(wps)))
        if not (k_wp < j and k_wps < j):
            raise AssertionError("trace reduction target is not lex-lower")
        c[j] = zero
        if wp[s - 1] < wp[s]:
            c[k_wps] = c[k_wps] + a
        else:
            shifted = a.shift(2)
            c[k_wp] = c[k_wp] + a - shifted
            c[k_wps] = c[k_wps] + shifted
    return out


def evaluate_annular(p: Permutation) -> HomflyPoly:
    """Closure value of the positive lift of an annularly reduced ``p``.

    A cycle with ``l`` points contributes ``a^(1-l) q^(l-1) d``.
    """
    if not is_annularly_reduced(p):
        raise ValueError(f"{p} is not annularly reduced")
    cyc = cycles(p)
    k = len(cyc)
    return HomflyPoly.monomial(a=k - p.n, q=p.n - k, d=k)


def trace_value(v: HeckeVector) -> HomflyPoly:
    """Evaluate a vector supported on annularly reduced permutations."""
    if not v.ring.is_exact:
        raise ValueError("HOMFLY evaluation needs exact integer coefficients")
    terms: dict = defaultdict(int)
    for j, a in v.nonzero():
        w = from_index(j, v.n)
        mono = evaluate_annular(w)
        ((ia, iq, k), _), = mono.terms.items()
        for e, c in a.terms().items():
            terms[(ia, iq + e, k)] += c
    return HomflyPoly(terms)


def homfly(b: BraidWord, threads: int = 1) -> HomflyPoly:
    """HOMFLY-PT polynomial of the closure of ``b``."""
    return trace_value(trace_reduce(represent(b, ZZ, threads=threads)))


def homfly_reduced(b: BraidWord, threads: int = 1) -> HomflyPoly:
    """Knot-normalised value (one factor of ``d`` removed); closure must be a knot."""
    comps = component_count(b)
    if comps != 1:
        raise ValueError(f"closure has {comps} components; reduced value needs a knot")
    return homfly(b, threads).reduced()


# -- skein oracle -------------------------------------------------------------

_Q2 = LaurentPoly.monomial(1, 2)
_ONE_MINUS_Q2 = LaurentPoly([1, 0, -1])
_QM2 = LaurentPoly.monomial(1, -2)
_ONE_MINUS_QM2 = LaurentPoly([-1, 0, 1], -2)


def _first_bad_crossing(n: int, letters: tuple) -> tuple[Optional[int], int]:
    """First crossing met as an under-strand when walking the closure.

    Components are walked in order of their lowest bottom position, each from
    that position upward.  At ``sigma_i^{+1}`` the strand going from position
    ``i`` to ``i+1`` is over; at ``sigma_i^{-1}`` the other one.  Returns
    ``(crossing, components)``; crossing is ``None`` for a descending diagram.
    """
    visited_pos = [False] * n
    seen = [False] * len(letters)
    comps = 0
    for start in range(n):
        if visited_pos[start]:
            continue
        comps += 1
        pos = start
        while True:
            visited_pos[pos] = True
            for k, (i, e) in enumerate(letters):
                if pos == i - 1:
                    over = e == 1
                    pos = i
                elif pos == i:
                    over = e == -1
                    pos = i - 1
                else:
                    continue
                if not seen[k]:
                    seen[k] = True
                    if not over:
                        return k, comps
            if pos == start:
                break
    return None, comps


def skein_oracle(b: BraidWord, max_crossings: int = 12) -> HomflyPoly:
    """Independent HOMFLY evaluation by skein resolution to descending diagrams.

    Each crossing first met from below is switched with
    ``P(L+) = q^2 P(L-) + (1 - q^2) P(L0)`` (or its inverse form), and a
    descending diagram is an unlink of ``c`` components with value
    ``(a^-1 q)^writhe d^c``.  Exponential in the crossing count; intended for
    small test braids only.
    """
    if len(b) > max_crossings:
        raise ResourceLimitError(
            f"skein oracle limited to {max_crossings} crossings, braid has {len(b)}"
        )
    return _skein(b.n, b.letters)


@lru_cache(maxsize=200_000)
def _skein(n: int, letters: tuple) -> HomflyPoly:
    bad, comps = _first_bad_crossing(n, letters)
    if bad is None:
        writhe = sum(e for _, e in letters)
        return HomflyPoly.monomial(a=-writhe, q=writhe, d=comps)
    i, e = letters[bad]
    switched = letters[:bad] + ((i, -e),) + letters[bad + 1:]
    smoothed = letters[:bad] + letters[bad + 1:]
    if e == 1:
        return _Q2 * _skein(n, switched) + _ONE_MINUS_Q2 * _skein(n, smoothed)
    return _QM2 * _skein(n, switched) + _ONE_MINUS_QM2 * _skein(n, smoothed)
