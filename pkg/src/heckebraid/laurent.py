"""
Laurent polynomials in ``q`` over ``Z`` or ``Z/mZ``.

Storage is dense: a valuation ``val`` plus a tuple of coefficients for the
exponents ``val, val+1, ...``.  Values are kept trimmed (no zero at either end)
so equal polynomials have identical representations; zero is ``val=0,
coeffs=()``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import zip_longest
from typing import Optional


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: exact integers (``modulus=None``) or ``Z/mZ``."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @classmethod
    def mod(cls, m: int) -> Ring:
        return cls(int(m))

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def reduce(self, c: int) -> int:
        return c if self.modulus is None else c % self.modulus

    def __str__(self) -> str:
        return "ZZ" if self.modulus is None else f"Z/{self.modulus}Z"


ZZ = Ring()


def _trim(val: int, coeffs: list) -> tuple[int, tuple]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and not coeffs[lo]:
        lo += 1
    if lo == hi:
        return 0, ()
    while not coeffs[hi - 1]:
        hi -= 1
    return val + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    """Immutable element of ``R[q, q^-1]``."""

    __slots__ = ("ring", "val", "coeffs")

    def __init__(self, coeffs=(), val: int = 0, ring: Ring = ZZ):
        m = ring.modulus
        cs = [int(c) for c in coeffs] if m is None else [int(c) % m for c in coeffs]
        self.ring = ring
        self.val, self.coeffs = _trim(val, cs)

    @classmethod
    def _raw(cls, ring: Ring, val: int, coeffs: tuple) -> LaurentPoly:
        # caller guarantees canonical (trimmed, reduced) input
        p = object.__new__(cls)
        p.ring = ring
        p.val = val
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls, ring: Ring = ZZ) -> LaurentPoly:
        return cls._raw(ring, 0, ())

    @classmethod
    def one(cls, ring: Ring = ZZ) -> LaurentPoly:
        return cls._raw(ring, 0, (1,))

    @classmethod
    def monomial(cls, c: int, e: int, ring: Ring = ZZ) -> LaurentPoly:
        return cls([c], e, ring)

    @classmethod
    def from_terms(cls, terms: dict, ring: Ring = ZZ) -> LaurentPoly:
        """Build from an ``{exponent: coefficient}`` mapping."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero(ring)
        lo, hi = min(terms), max(terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] += c
        return cls(cs, lo, ring)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_one(self) -> bool:
        return self.val == 0 and self.coeffs == (1,)

    def degree(self) -> Optional[int]:
        """Largest exponent with a nonzero coefficient, ``None`` for zero."""
        if not self.coeffs:
            return None
        return self.val + len(self.coeffs) - 1

    def valuation(self) -> Optional[int]:
        """Smallest exponent with a nonzero coefficient, ``None`` for zero."""
        if not self.coeffs:
            return None
        return self.val

    def terms(self) -> dict[int, int]:
        return {self.val + k: c for k, c in enumerate(self.coeffs) if c}

    def coefficient(self, e: int) -> int:
        k = e - self.val
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly([other], 0, self.ring)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.ring == other.ring and self.val == other.val
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ring, self.val, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({self}, ring={self.ring})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly([other], 0, self.ring)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def _combine(self, other: LaurentPoly, sign: int) -> LaurentPoly:
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other if sign > 0 else -other
        lo = min(self.val, other.val)
        a = (0,) * (self.val - lo) + self.coeffs
        b = (0,) * (other.val - lo) + other.coeffs
        m = self.ring.modulus
        if sign > 0:
            cs = [x + y for x, y in zip_longest(a, b, fillvalue=0)]
        else:
            cs = [x - y for x, y in zip_longest(a, b, fillvalue=0)]
        if m is not None:
            cs = [c % m for c in cs]
        val, coeffs = _trim(lo, cs)
        return LaurentPoly._raw(self.ring, val, coeffs)

    def __add__(self, other) -> LaurentPoly:
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        return self._combine(self._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        return self._combine(self._coerce(other), -1)

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other)._combine(self, -1)

    def __neg__(self) -> LaurentPoly:
        m = self.ring.modulus
        if m is None:
            cs = tuple(-c for c in self.coeffs)
        else:
            cs = tuple((-c) % m for c in self.coeffs)
        return LaurentPoly._raw(self.ring, self.val, cs)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return self.mul_monomial(other, 0)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero(self.ring)
        cs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    cs[i + j] += x * y
        return LaurentPoly(cs, self.val + other.val, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.one(self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, c: int, e: int) -> LaurentPoly:
        """Multiply by ``c * q^e`` with a shift and a scalar pass."""
        m = self.ring.modulus
        if m is not None:
            c %= m
        if not c or not self.coeffs:
            return LaurentPoly.zero(self.ring)
        if c == 1:
            return LaurentPoly._raw(self.ring, self.val + e, self.coeffs)
        cs = [c * x for x in self.coeffs]
        if m is not None:
            cs = [x % m for x in cs]
            val, coeffs = _trim(self.val + e, cs)
            return LaurentPoly._raw(self.ring, val, coeffs)
        return LaurentPoly._raw(self.ring, self.val + e, tuple(cs))

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by ``q^e``."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.ring, self.val + e, self.coeffs)

    def change_ring(self, ring: Ring) -> LaurentPoly:
        """Reduce coefficients into ``ring`` (from exact integers)."""
        return LaurentPoly(self.coeffs, self.val, ring)


_TERM = re.compile(r"([+-])(\d*)(\*?q(?:\^(-?\d+))?)?")

def format_poly(p: LaurentPoly) -> str:
    """Render as ``c*q^e`` terms in ascending exponent, e.g. ``-1*q^-2 + 1``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e, c in sorted(p.terms().items()):
        parts.append(str(c) if e == 0 else f"{c}*q^{e}")
    return " + ".join(parts)


def parse_poly(text: str, ring: Ring = ZZ) -> LaurentPoly:
    """Parse the :func:`format_poly` grammar (``-`` between terms also accepted).

    >>> str(parse_poly("1 - q^-2"))
    '-1*q^-2 + 1'
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial")
    s = s.replace("+-", "-").replace("-+", "-").replace("--", "+")
    if s[0] not in "+-":
        s = "+" + s
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        if m.group(3) and m.group(2) == "" and m.group(3).startswith("*"):
            raise ValueError(f"dangling '*' in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, 0) + sign * coef
        pos = m.end()
    return LaurentPoly.from_terms(terms, ring)
