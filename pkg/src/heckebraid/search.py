"""
Randomized search for braids with trivial Hecke image over ``Z/mZ``.

Positive braids in normal form are grown one Garside letter at a time.  Each
candidate ``b`` is scored by scanning ``psi(Delta^k b)`` for ``k = 0, -1, ...``
and measuring projlength; candidates are kept in per-score buckets of bounded
size filled by reservoir sampling.  When some ``psi(Delta^k b)`` collapses to
a single coefficient-one ``T_w`` the braid ``s_w^-1 Delta^k b`` is a kernel
element and is emitted after verification.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .braid import BraidWord, delta_inverse, inverse, positive_lift, read_braid_file
from .garside import GarsideWord, sample_extension, to_braid
from .hecke import (HeckeVector, apply_generator, has_negative_degree,
                    is_trivial, projlength, represent, single_unit_coordinate)
from .laurent import ZZ, Ring
from .permutation import Permutation, all_permutations, from_index

FIXTURES = ("b5_mod2", "b4_mod2", "b4_mod3", "b4_mod4")
MODES = ("min", "max")


@dataclass
class Candidate:
    """A scored positive braid; ``vector`` is kept only for low scores."""

    g: GarsideWord
    score: int
    best_k: int
    unit: Optional[tuple[int, int]] = None  # (k, index) of a unit vector, if met
    vector: Optional[HeckeVector] = None


@dataclass
class Bucket:
    """Reservoir of at most ``capacity`` candidates sharing one score."""

    key: int
    capacity: int
    reservoir: list = field(default_factory=list)
    seen_count: int = 0

    def offer(self, item, rng: random.Random) -> None:
        # classic algorithm R: the t-th attempt survives with probability B/t
        self.seen_count += 1
        if len(self.reservoir) < self.capacity:
            self.reservoir.append(item)
            return
        j = rng.randrange(self.seen_count)
        if j < self.capacity:
            self.reservoir[j] = item


@dataclass(frozen=True)
class KernelWitness:
    """Verified kernel element ``s_w^-1 Delta^k b`` (positive part applied first)."""

    word: BraidWord
    modulus: int
    idx: int
    garside_length: int
    delta_power: int = 0
    nontrivial_by: str = ""

    def to_json(self) -> dict:
        return {
            "n": self.word.n,
            "word": self.word.to_ints(),
            "crossings": len(self.word),
            "modulus": self.modulus,
            "idx": self.idx,
            "garside_length": self.garside_length,
            "delta_power": self.delta_power,
            "nontrivial_by": self.nontrivial_by,
        }


@dataclass
class SearchResult:
    witnesses: list
    generations: list
    truncated: bool = False


def _apply_delta_inverse(v: HeckeVector, ring_letters) -> None:
    for i, e in ring_letters:
        apply_generator(v, i, e)


def scan(g: GarsideWord, ring: Ring, mode: str = "min",
         keep_below: Optional[int] = 2) -> Candidate:
    """Score ``g`` and note the first ``k`` at which the vector is a unit ``T_w``.

    The scan records projlength of ``psi(Delta^k b)`` for ``k = 0, -1, ...``
    and stops at the first ``k < 0`` whose vector has a coordinate of purely
    negative degree (that ``k`` is not recorded).  A hard floor of
    ``k >= -(2 len(g) + n)`` guards termination.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if len(g) == 0:
        raise ValueError("augmented projlength needs a nonempty Garside word")
    v = represent(to_braid(g), ring)
    dinv = delta_inverse(g.n).letters
    floor = -(2 * len(g) + g.n)
    best = None
    best_k = 0
    best_vec = None
    unit = None
    k = 0
    while True:
        if k < 0 and has_negative_degree(v):
            break
        p = projlength(v)
        if best is None or (p < best if mode == "min" else p > best):
            best, best_k = p, k
            best_vec = v.copy() if keep_below is not None and p <= keep_below else None
        if unit is None:
            j = single_unit_coordinate(v)
            if j is not None:
                unit = (k, j)
        if k <= floor:
            break
        _apply_delta_inverse(v, dinv)
        k -= 1
    return Candidate(g, best, best_k, unit, best_vec)


def augmented_projlength(g: GarsideWord, ring: Ring, mode: str = "min") -> tuple[int, int]:
    """``(score, best_k)`` aggregated over the Delta-power scan.

    Examples
    --------
    >>> from heckebraid.permutation import Permutation
    >>> g = GarsideWord(2, (Permutation([2, 1]),) * 2)
    >>> augmented_projlength(g, Ring.mod(2), "max")
    (2, 0)
    """
    c = scan(g, ring, mode, keep_below=None)
    return c.score, c.best_k


def is_delta_power(g: GarsideWord) -> bool:
    """True when every letter is the half twist.

    Normal forms are unique, so ``g`` equals some ``Delta^l`` exactly when all
    its letters are ``w0``.
    """
    w0 = Permutation.longest(g.n)
    return all(p == w0 for p in g.letters)


def verify_kernel(word: BraidWord, m: Optional[int]) -> bool:
    """Does ``word`` map to the identity over ``Z/mZ`` (``None``: integers)?"""
    ring = ZZ if m is None else Ring.mod(m)
    return is_trivial(represent(word, ring))


def nontriviality(word: BraidWord) -> str:
    """Name of the first check proving ``word`` is not the trivial braid, or ''.

    Tries the exponent sum, then the underlying permutation, then the Hecke
    image over the integers.
    """
    if word.exponent_sum() != 0:
        return "exponent_sum"
    if not word.underlying_permutation().is_identity():
        return "permutation"
    if word.n <= 8 and not verify_kernel(word, None):
        return "hecke_zz"
    return ""


def witness_word(g: GarsideWord, k: int, idx: int) -> BraidWord:
    """``s_idx^-1 Delta^k b`` in application order."""
    w = from_index(idx, g.n)
    b = to_braid(g)
    tail = BraidWord(g.n, delta_inverse(g.n).letters * (-k))
    return b * tail * inverse(positive_lift(w))


def _extract(c: Candidate, m: int) -> Optional[KernelWitness]:
    k, idx = c.unit
    word = witness_word(c.g, k, idx)
    if not verify_kernel(word, m):
        raise AssertionError("extracted witness failed verification")
    why = nontriviality(word)
    if not why:
        return None
    return KernelWitness(word, m, idx, len(c.g), k, why)


def run_search(n: int, m: int, bucket_capacity: int = 64, max_garside_length: int = 8,
               samples_per_step: int = 2, seed: int = 0, mode: str = "min",
               threads: int = 1, time_limit: Optional[float] = None,
               score_cache: int = 2) -> list:
    """Witnesses found by :func:`search`; see there for parameters."""
    return search(n, m, bucket_capacity, max_garside_length, samples_per_step, seed,
                  mode, threads, time_limit, score_cache).witnesses


def search(n: int, m: int, bucket_capacity: int = 64, max_garside_length: int = 8,
           samples_per_step: int = 2, seed: int = 0, mode: str = "min",
           threads: int = 1, time_limit: Optional[float] = None,
           score_cache: int = 2) -> SearchResult:
    """Bucketed reservoir search over positive normal forms in ``B_n``.

    Parameters
    ----------
    n : int
        Strand count, at most 6 for desk-scale runs.
    m : int
        Coefficient modulus, at least 2.
    bucket_capacity : int
        Reservoir size per score value.
    max_garside_length : int
        Last generation to build.
    samples_per_step : int
        Extensions drawn per retained candidate and generation.
    seed : int
        Master seed.  Each child draws from its own stream keyed by
        ``(seed, generation, parent id, draw)``, so the outcome does not depend
        on ``threads``.
    time_limit : float, optional
        Wall-clock budget in seconds; when exceeded the search stops after the
        current generation and the result is marked truncated.

    Returns
    -------
    SearchResult
        Verified witnesses (deduplicated, in discovery order) and one log
        record per generation.
    """
    if not 2 <= n <= 6:
        raise ValueError(f"search supports 2 <= n <= 6, got {n}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if bucket_capacity < 1 or samples_per_step < 1 or max_garside_length < 1:
        raise ValueError("bucket capacity, samples per step and max length must be positive")
    ring = Ring.mod(m)
    start = time.perf_counter()
    w0 = Permutation.longest(n)
    found: dict = {}
    log = []
    truncated = False

    def score(g: GarsideWord) -> Candidate:
        return scan(g, ring, mode, score_cache)

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    mapper = pool.map if pool else map
    try:
        children = [GarsideWord(n, (p,)) for p in all_permutations(n)
                    if not p.is_identity() and p != w0]
        for gen in range(1, max_garside_length + 1):
            scored = list(mapper(score, children))
            collector = random.Random(f"{seed}:collect:{gen}")
            buckets: dict[int, Bucket] = {}
            for c in scored:
                if c.unit is not None and not is_delta_power(c.g):
                    wit = _extract(c, m)
                    if wit is not None and wit.word not in found:
                        found[wit.word] = wit
                b = buckets.get(c.score)
                if b is None:
                    b = buckets[c.score] = Bucket(c.score, bucket_capacity)
                b.offer(c, collector)
            log.append({
                "generation": gen,
                "candidates": len(scored),
                "best_score": min(buckets) if mode == "min" else max(buckets),
                "histogram": {str(k): buckets[k].seen_count for k in sorted(buckets)},
                "witnesses": len(found),
            })
            if gen == max_garside_length:
                break
            if time_limit is not None and time.perf_counter() - start > time_limit:
                truncated = True
                break
            parents = [c for key in sorted(buckets) for c in buckets[key].reservoir]
            children = []
            for pid, c in enumerate(parents):
                for d in range(samples_per_step):
                    rng = random.Random(f"{seed}:{gen}:{pid}:{d}")
                    children.append(c.g.extend(sample_extension(c.g.last, rng)))
    except MemoryError:
        truncated = True
    finally:
        if pool:
            pool.shutdown()
    return SearchResult(list(found.values()), log, truncated)


def load_fixture(name: str) -> BraidWord:
    """Published kernel braid shipped with the package (see ``FIXTURES``)."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    text = resources.files(__package__).joinpath("fixtures").joinpath(f"{name}.braid").read_text()
    return read_braid_file(text)


def fixture_modulus(name: str) -> int:
    return int(name.rsplit("mod", 1)[1])


def dumps_log(result: SearchResult) -> str:
    return json.dumps({
        "generations": result.generations,
        "truncated": result.truncated,
        "witnesses": [w.to_json() for w in result.witnesses],
    }, indent=2, sort_keys=True)
